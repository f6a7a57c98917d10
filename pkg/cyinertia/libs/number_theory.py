from typing import Optional

from sympy.ntheory import isprime, n_order, sqrt_mod


class NumberTheoryHelper:
    """Encapsulates all sympy.ntheory operations on residues mod p"""

    @staticmethod
    def is_prime(n: int) -> bool:
        """Primality test for field characteristics"""
        return bool(isprime(n))

    @staticmethod
    def sqrt(a: int, p: int) -> Optional[int]:
        """Smaller canonical square root of a mod p, or None for non-residues"""
        a %= p
        if a == 0:
            return 0
        roots = sqrt_mod(a, p, all_roots=True)
        if not roots:
            return None
        return min(int(r) % p for r in roots)

    @staticmethod
    def multiplicative_order(a: int, p: int) -> int:
        """Order of a nonzero residue in the unit group of F_p"""
        return int(n_order(a % p, p))

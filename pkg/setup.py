from setuptools import setup, find_packages

with open("README.md", "r") as fh:
    long_description = fh.read()

setup(
    name="cyinertia",
    version="0.1.0",
    packages=find_packages(exclude=["tests", "examples*"]),
    install_requires=[
        "sympy>=1.12",
    ],
    extras_require={
        "test": ["pytest", "hypothesis"],
    },
    entry_points={
        "console_scripts": ["cyinertia=cyinertia.cli:main"],
    },
    python_requires=">=3.9",
    description="inertia groups of Calabi-Yau multiquadric hypersurfaces in products of P^1",
    long_description=long_description,
    long_description_content_type="text/markdown",
)

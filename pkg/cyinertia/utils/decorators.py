import functools
import logging
from typing import Callable, Generic, Optional, TypeVar

from ..errors import CYException

logger = logging.getLogger(__name__)

T = TypeVar("T")


class CYResult(Generic[T]):
    def __init__(
        self,
        value: Optional[T] = None,
        error: Optional[str] = None,
        error_code: Optional[str] = None,
    ):
        self.value = value
        self.error = error
        self.error_code = error_code

    @property
    def success(self) -> bool:
        return self.error is None

    def __bool__(self) -> bool:
        return self.success

    def unwrap(self) -> T:
        """
        Unwraps the CYResult, returning the value if successful or
        raising a CYException if there's an error.
        """
        if self.error:
            raise CYException(
                self.error, self.error_code if self.error_code else "UNKNOWN_ERROR"
            )
        return self.value


R = TypeVar("R")


def handle_errors(func: Callable[..., R]) -> Callable[..., CYResult[R]]:
    @functools.wraps(func)
    def wrapper(*args, **kwargs) -> CYResult[R]:
        try:
            return CYResult[R](value=func(*args, **kwargs))
        except CYException as e:
            logger.debug("%s failed: %s (%s)", func.__name__, e.message, e.code)
            return CYResult[R](error=e.message, error_code=e.code)
        except Exception as e:
            logger.debug("%s raised unexpectedly: %r", func.__name__, e)
            return CYResult[R](error=str(e), error_code="UNEXPECTED_ERROR")

    return wrapper

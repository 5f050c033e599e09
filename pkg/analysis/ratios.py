"""Performance ratio of a heuristic result against an optimum or an upper bound."""

from dataclasses import dataclass
from typing import Union

from dealcs.core.exceptions import DomainError

Length = Union[int, float]


@dataclass(frozen=True)
class RatioReport:
    """reference_len / cs_len; 1.0 is optimal, larger is worse."""

    reference_len: Length
    cs_len: Length
    ratio: float


def performance_ratio(reference_len: Length, cs_len: Length) -> RatioReport:
    """
    Compute the performance ratio |reference| / |CS|.

    Averages (e.g. mean lengths over a setting) are accepted as well as integers.

    Args:
        reference_len: Optimum or upper bound on the LCS length
        cs_len: Length of the heuristic result

    Returns:
        RatioReport

    Raises:
        DomainError: If reference_len < 0 or cs_len <= 0.
    """
    if reference_len < 0:
        raise DomainError(
            f"reference_len must be >= 0, got {reference_len}", "reference_len", reference_len
        )
    if cs_len <= 0:
        raise DomainError("empty CS has undefined ratio", "cs_len", cs_len)
    return RatioReport(reference_len, cs_len, reference_len / cs_len)

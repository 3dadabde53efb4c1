"""
Fold Service - Forward-chaining cross-validation splits.
"""

from ppfd.domain.entities.evaluation import Fold, FoldPlan
from ppfd.domain.exceptions import FoldPlanError, ValidationError


def forward_chain_splits(n: int, k: int, min_block: int = 2) -> FoldPlan:
    """
    Partition [0, n) into k + 1 contiguous near-equal blocks.

    Fold i trains on blocks 0..i and validates on block i + 1. Leftover
    samples go to the earliest blocks, one each.

    Args:
        n: Series length
        k: Number of folds
        min_block: Smallest block a model can still train or validate on

    Raises:
        FoldPlanError: n < (k + 1) * min_block
    """
    if k < 1:
        raise ValidationError("folds", f"must be >= 1, got {k}")
    if min_block < 1:
        raise ValidationError("min_block", f"must be >= 1, got {min_block}")
    minimum = (k + 1) * min_block
    if n < minimum:
        raise FoldPlanError(n, k, minimum)

    base, extra = divmod(n, k + 1)
    bounds = [0]
    for i in range(k + 1):
        bounds.append(bounds[-1] + base + (1 if i < extra else 0))

    return FoldPlan(
        tuple(
            Fold(train=(0, bounds[i + 1]), validate=(bounds[i + 1], bounds[i + 2]))
            for i in range(k)
        )
    )

import numpy as np


def index_to_mask(index, size: int, invert: bool = False) -> np.ndarray:
    """
    Boolean mask of length ``size``, True on ``index`` (or everywhere but on ``index`` when ``invert`` is set).
    """
    mask = np.full(size, invert, dtype=bool)
    mask[np.asarray(index, dtype=np.int64).reshape(-1)] = not invert
    return mask


def relabel_lookup(mask: np.ndarray, first_label: int = 0) -> np.ndarray:
    """
    Compute the lookup table which relabels the kept entries of a mask consecutively.

    Args:
        mask: A 1D boolean array, True for the kept entries. With 1-indexed labels, entry 0 is left False.
        first_label: Offset added to every new label (the first kept entry gets first_label + 1).

    Returns:
        A 1D integer array ``lookup`` such that ``lookup[i]`` is the new label of the kept entry ``i`` (and 0 for the
        removed ones).
    """
    shift = np.cumsum(mask) + first_label
    return np.where(mask, shift, 0)


def apply_lookup(array, lookup: np.ndarray | None) -> np.ndarray:
    """Apply a lookup table on an array of labels (identity if lookup is None)."""
    array = np.asarray(array, dtype=np.int64)
    if lookup is None:
        return array
    return lookup[array]


def compose_maps(outer: tuple[int, ...], inner: tuple[int, ...], one_indexed: bool = True) -> tuple[int, ...]:
    """
    Compose two back-maps: ``inner`` maps labels of a sub-subgraph to the subgraph, ``outer`` maps those to the graph.
    """
    offset = 1 if one_indexed else 0
    return tuple(outer[i - offset] for i in inner)

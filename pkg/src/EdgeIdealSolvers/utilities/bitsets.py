from typing import Iterable, Iterator, Tuple


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def bits(mask: int) -> Tuple[int, ...]:
    """Indices of the set bits of mask, increasing."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def submasks(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself (Gosper style decreasing walk)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def support_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    # canonical order used everywhere: by cardinality, then lexicographic support
    return popcount(mask), bits(mask)

"""Bitmask encoding of subsets of [n] = {1, ..., n}.

Element ``a`` occupies bit ``a - 1``, so the subset {1, 3} is the mask 0b101.

>>> mask_of([1, 3])
5
>>> elements_of(5)
(1, 3)
"""


def full_mask(n: int) -> int:
    """Mask of the whole ground set [n]."""
    return (1 << n) - 1


def bit(a: int) -> int:
    """Mask of the singleton {a}."""
    return 1 << (a - 1)


def mask_of(elements) -> int:
    """Mask of an iterable of elements of [n]."""
    m = 0
    for a in elements:
        m |= 1 << (a - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Elements of a mask, ascending.

    >>> elements_of(0)
    ()
    """
    out = []
    a = 1
    while mask:
        if mask & 1:
            out.append(a)
        mask >>= 1
        a += 1
    return tuple(out)


def iter_submasks(mask: int):
    """All submasks of ``mask``, including 0 and ``mask`` itself.

    Standard descending-submask walk: s -> (s - 1) & mask.
    """
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


def set_label(mask: int) -> str:
    """Render a mask as ``{1,3}`` (``{}`` when empty)."""
    return "{" + ",".join(str(a) for a in elements_of(mask)) + "}"

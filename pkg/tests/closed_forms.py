"""Congruence formulas for the affine permutation realizations, used as oracles."""


def _step(z, mod, up, down, k=1):
    r = z % mod
    if r in {u % mod for u in up}:
        return z + k
    if r in {d % mod for d in down}:
        return z - k
    return z


def closed_form(kind, l, j, z):
    if kind == "A":
        return _step(z, l + 1, [j], [j + 1])
    m = 2 * l
    generic = lambda: _step(z, m, [j, -j], [j + 1, -j + 1])
    if kind == "C":
        return generic()
    if kind == "A2":
        if j == 0:
            return _step(z, m, [1, -1], [0, 2])
        if j == 1:
            return _step(z, m, [-1, 0], [1, 2], 2)
        return generic()
    if kind == "D":
        c = {0: 0, l - 1: 1, 1: 0, l: 1}
        if j in (0, l - 1):
            return _step(z, m, [j - 1 + c[j], j + 1 + c[j]], [j + c[j], j + 2 + c[j]])
        if j in (1, l):
            return _step(z, m, [j - 2 + c[j], j - 1 + c[j]], [j + c[j], j + 1 + c[j]], 2)
        return generic()
    raise ValueError(kind)

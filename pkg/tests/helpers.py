"""Shared builders for the randomized tests."""

from toralzeta import IntMatrix, det_exact, mat_mul


def random_matrix(rng, dim=None, low=-3, high=3):
    d = dim if dim is not None else rng.randint(1, 4)
    return IntMatrix([[rng.randint(low, high) for _ in range(d)] for _ in range(d)])


def random_nonsingular(rng, dim=None, low=-3, high=3):
    while True:
        m = random_matrix(rng, dim, low, high)
        if det_exact(m) != 0:
            return m


def block_diag(*blocks):
    total = sum(len(b) for b in blocks)
    rows = [[0] * total for _ in range(total)]
    offset = 0
    for block in blocks:
        for i, row in enumerate(block):
            for j, x in enumerate(row):
                rows[offset + i][offset + j] = x
        offset += len(block)
    return IntMatrix(rows)


def shear_conjugate(mat, rng, times=2):
    """U @ mat @ U^-1 for random unimodular shears U; the spectrum is unchanged."""
    out = mat
    d = out.dim
    if d == 1:
        return out
    for _ in range(times):
        i = rng.randrange(d)
        j = rng.randrange(d)
        while j == i:
            j = rng.randrange(d)
        c = rng.randint(-2, 2)
        u = [[int(a == b) for b in range(d)] for a in range(d)]
        uinv = [row[:] for row in u]
        u[i][j] = c
        uinv[i][j] = -c
        out = mat_mul(mat_mul(IntMatrix(u), out), IntMatrix(uinv))
    return out


def random_with_unit_eigenvalue(rng, low=-3, high=3):
    """Random d <= 4 matrix with 1, -1 or the pair +-1 in the spectrum."""
    kind = rng.choice(["one", "minus-one", "swap"])
    if kind == "one":
        block = [[1]]
    elif kind == "minus-one":
        block = [[-1]]
    else:
        block = [[0, 1], [1, 0]]
    rest = rng.randint(0, 4 - len(block))
    blocks = [block]
    if rest:
        blocks.append(
            [[rng.randint(low, high) for _ in range(rest)] for _ in range(rest)]
        )
        if rng.random() < 0.5:
            blocks.reverse()
    return shear_conjugate(block_diag(*blocks), rng)

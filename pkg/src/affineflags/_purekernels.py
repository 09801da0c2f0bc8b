"""Pure-Python integer kernels.

These four functions are the hot inner loop of every enumeration in the
package: products of small integer matrices, matrix-vector application,
the sign test for affine root vectors, and the descent scan.  They are
the reference implementation; ``affineflags._speedups`` is a compiled
twin with the same signatures, selected at import by
:mod:`affineflags.kernels`.

Matrices are flat row-major tuples of ``n*n`` ints, vectors are tuples of
``n`` ints.  Entry ``0`` of a vector is the level (delta coordinate), the
rest are finite coordinates in the simple-root basis.
"""


def mat_mul(a, b, n):
    """Product of two flat n-by-n integer matrices."""
    out = [0] * (n * n)
    for i in range(n):
        row = i * n
        for k in range(n):
            aik = a[row + k]
            if aik:
                kb = k * n
                for j in range(n):
                    out[row + j] += aik * b[kb + j]
    return tuple(out)


def mat_vec(m, v, n):
    """Apply a flat n-by-n matrix to a length-n vector."""
    return tuple(
        sum(m[i * n + j] * v[j] for j in range(n)) for i in range(n)
    )


def is_negative_root(v):
    """Sign test for a real affine root vector under the level convention.

    Positive roots are those of positive level, plus the level-zero roots
    whose finite part is a negative finite root.  A real root at level
    zero has finite coordinates of uniform sign, so scanning for one
    positive coordinate suffices.
    """
    level = v[0]
    if level < 0:
        return True
    if level > 0:
        return False
    return any(c > 0 for c in v[1:])


def lowest_descent(m, simples, n, mask):
    """Index of the lowest right descent of the element with matrix ``m``.

    ``simples`` is the concatenation of the n simple affine root vectors;
    ``mask`` is a bitmask of generator indices to consider.  Returns -1
    when no masked generator is a descent.  Generator i is a right descent
    exactly when the element maps the i-th simple affine root to a
    negative root.
    """
    for i in range(n):
        if not (mask >> i) & 1:
            continue
        level = 0
        for j in range(n):
            level += m[j] * simples[i * n + j]
        if level < 0:
            return i
        if level > 0:
            continue
        for row in range(1, n):
            acc = 0
            base = row * n
            for j in range(n):
                acc += m[base + j] * simples[i * n + j]
            if acc:
                if acc > 0:
                    return i
                break
    return -1

"""Independent reference computations used only by the tests.

Nothing here calls into the code paths being checked.
"""


def fib_list(n_max):
    """F_0..F_n_max by the plain recurrence."""
    out = [0, 1]
    while len(out) <= n_max:
        out.append(out[-1] + out[-2])
    return out[: n_max + 1]


def fib_values_through(bound):
    out = [0, 1]
    while out[-1] <= bound:
        out.append(out[-1] + out[-2])
    return out


def lucas_list(n_max):
    """L_0 = 2, L_1 = 1; F_{k+2} - F_{k-2} equals L_k."""
    out = [2, 1]
    while len(out) <= n_max:
        out.append(out[-1] + out[-2])
    return out


def brute_block_hits(x, L, fib_set):
    """Try every L-digit block (leading zeros allowed) appended by string concatenation."""
    hits = []
    for d in range(10**L):
        block = str(d).zfill(L)
        y = int(str(x) + block)
        if y in fib_set:
            hits.append((y, block))
    return hits


def pisano_brute(m):
    """Period of F_n mod m by walking the residue list until (0, 1) recurs."""
    start = (0, 1 % m)
    res = list(start)
    n = 0
    while True:
        n += 1
        res.append((res[-1] + res[-2]) % m)
        if (res[n], res[n + 1]) == start:
            return n

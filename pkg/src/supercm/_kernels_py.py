"""Pure-Python monomial and polynomial kernels.

A monomial key is a pair ``(evens, odds)`` of tuples of integer generator ids.
``evens`` is sorted and may repeat ids (repetition encodes exponents);
square-zero even ids are negative, so they sort first and a repeat kills the
monomial.  ``odds`` is strictly increasing.  The compiled twin in
``_ckernels.pyx`` implements exactly the same functions.
"""


def merge_odd(o1, o2):
    """Return ``(sign, merged)`` for the product of two canonical odd parts."""
    if not o1:
        return 1, o2
    if not o2:
        return 1, o1
    n1 = len(o1)
    n2 = len(o2)
    i = j = 0
    swaps = 0
    out = []
    while i < n1 and j < n2:
        x = o1[i]
        y = o2[j]
        if x < y:
            out.append(x)
            i += 1
        elif x > y:
            out.append(y)
            j += 1
            swaps += n1 - i
        else:
            return 0, ()
    if i < n1:
        out.extend(o1[i:])
    if j < n2:
        out.extend(o2[j:])
    return (-1 if swaps & 1 else 1), tuple(out)


def merge_even(e1, e2):
    """Merged even part, or ``None`` when a square-zero generator repeats."""
    if not e1:
        return e2
    if not e2:
        return e1
    m = tuple(sorted(e1 + e2))
    if m[0] < 0:
        for k in range(len(m) - 1):
            if m[k] >= 0:
                break
            if m[k] == m[k + 1]:
                return None
    return m


def mono_mul(m1, m2):
    s, odd = merge_odd(m1[1], m2[1])
    if not s:
        return 0, None
    ev = merge_even(m1[0], m2[0])
    if ev is None:
        return 0, None
    return s, (ev, odd)


def poly_mul(t1, t2):
    """Product of two term dicts ``{monomial: coeff}``; zero terms dropped."""
    out = {}
    get = out.get
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            s, m = mono_mul(m1, m2)
            if s:
                c = c1 * c2
                out[m] = get(m, 0) + (c if s > 0 else -c)
    return {m: c for m, c in out.items() if c}


def sort_odd(seq):
    """Sort a sequence of odd ids; return ``(sign, tuple)``, sign 0 on repeats."""
    items = list(seq)
    sign = 1
    n = len(items)
    for i in range(1, n):
        x = items[i]
        j = i - 1
        while j >= 0 and items[j] > x:
            items[j + 1] = items[j]
            j -= 1
            sign = -sign
        if j >= 0 and items[j] == x:
            return 0, ()
        items[j + 1] = x
    return sign, tuple(items)


def koszul_exponent(xpar, ypar):
    """Sum over i<j of |x_j||y_i| for the legwise product of two pure tensors."""
    acc = 0
    prefix = 0
    for k in range(len(xpar)):
        if xpar[k]:
            acc += prefix
        prefix += ypar[k]
    return acc


def tensor2_mul(t1, t2):
    """Product of two-leg tensors of monomials with the sign (-1)^{|x2||y1|}."""
    out = {}
    get = out.get
    for k1, c1 in t1.items():
        p2 = len(k1[1][1]) & 1
        for k2, c2 in t2.items():
            s1, m1 = mono_mul(k1[0], k2[0])
            if not s1:
                continue
            s2, m2 = mono_mul(k1[1], k2[1])
            if not s2:
                continue
            s = s1 * s2
            if p2 and len(k2[0][1]) & 1:
                s = -s
            key = (m1, m2)
            c = c1 * c2
            out[key] = get(key, 0) + (c if s > 0 else -c)
    return {k: c for k, c in out.items() if c}

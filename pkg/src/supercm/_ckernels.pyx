# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled monomial and polynomial kernels (same contract as _kernels_py)."""


cpdef tuple merge_odd(tuple o1, tuple o2):
    cdef Py_ssize_t n1 = len(o1), n2 = len(o2), i = 0, j = 0
    cdef long swaps = 0
    cdef long x, y
    cdef list out
    if n1 == 0:
        return (1, o2)
    if n2 == 0:
        return (1, o1)
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
            return (0, ())
    while i < n1:
        out.append(o1[i])
        i += 1
    while j < n2:
        out.append(o2[j])
        j += 1
    return ((-1 if swaps & 1 else 1), tuple(out))


cpdef object merge_even(tuple e1, tuple e2):
    cdef Py_ssize_t n1 = len(e1), n2 = len(e2), i = 0, j = 0, k
    cdef long x, y
    cdef list out
    if n1 == 0:
        return e2
    if n2 == 0:
        return e1
    out = []
    while i < n1 and j < n2:
        x = e1[i]
        y = e2[j]
        if x <= y:
            out.append(x)
            i += 1
        else:
            out.append(y)
            j += 1
    while i < n1:
        out.append(e1[i])
        i += 1
    while j < n2:
        out.append(e2[j])
        j += 1
    if <long>out[0] < 0:
        for k in range(len(out) - 1):
            x = out[k]
            if x >= 0:
                break
            if x == <long>out[k + 1]:
                return None
    return tuple(out)


cpdef tuple mono_mul(tuple m1, tuple m2):
    cdef tuple r = merge_odd(<tuple>m1[1], <tuple>m2[1])
    cdef int s = r[0]
    if s == 0:
        return (0, None)
    ev = merge_even(<tuple>m1[0], <tuple>m2[0])
    if ev is None:
        return (0, None)
    return (s, (ev, r[1]))


cpdef dict poly_mul(dict t1, dict t2):
    cdef dict out = {}
    cdef tuple r
    cdef int s
    for m1, c1 in t1.items():
        for m2, c2 in t2.items():
            r = mono_mul(<tuple>m1, <tuple>m2)
            s = r[0]
            if s:
                c = c1 * c2
                m = r[1]
                if s > 0:
                    out[m] = out.get(m, 0) + c
                else:
                    out[m] = out.get(m, 0) - c
    return {m: c for m, c in out.items() if c}


cpdef tuple sort_odd(object seq):
    cdef list items = list(seq)
    cdef int sign = 1
    cdef Py_ssize_t n = len(items), i, j
    for i in range(1, n):
        x = items[i]
        j = i - 1
        while j >= 0 and items[j] > x:
            items[j + 1] = items[j]
            j -= 1
            sign = -sign
        if j >= 0 and items[j] == x:
            return (0, ())
        items[j + 1] = x
    return (sign, tuple(items))


cpdef long koszul_exponent(tuple xpar, tuple ypar):
    cdef long acc = 0, prefix = 0
    cdef Py_ssize_t k
    for k in range(len(xpar)):
        if xpar[k]:
            acc += prefix
        prefix += <long>ypar[k]
    return acc


cpdef dict tensor2_mul(dict t1, dict t2):
    cdef dict out = {}
    cdef tuple r1, r2, k1, k2
    cdef int s, p2, q1
    for k1, c1 in t1.items():
        p2 = len(<tuple>(<tuple>k1[1])[1]) & 1
        for k2, c2 in t2.items():
            q1 = len(<tuple>(<tuple>k2[0])[1]) & 1
            r1 = mono_mul(<tuple>k1[0], <tuple>k2[0])
            if not r1[0]:
                continue
            r2 = mono_mul(<tuple>k1[1], <tuple>k2[1])
            if not r2[0]:
                continue
            s = <int>r1[0] * <int>r2[0]
            if p2 & q1:
                s = -s
            key = (r1[1], r2[1])
            c = c1 * c2
            out[key] = out.get(key, 0) + (c if s > 0 else -c)
    return {k: c for k, c in out.items() if c}

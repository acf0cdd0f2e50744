# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled submodule counting kernel; same contract as ``_pykernel``."""

from libc.stdlib cimport malloc, calloc, free

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p) noexcept nogil:
    cdef i64 t = 0, nt = 1, r = p, nr = a % p, q, tmp
    while nr != 0:
        q = r // nr
        tmp = t - q * nt
        t = nt
        nt = tmp
        tmp = r - q * nr
        r = nr
        nr = tmp
    if t < 0:
        t += p
    return t


cdef int _rref(i64* A, int nrows, int ncols, int stride, i64 p, int* piv) noexcept nogil:
    """In-place RREF of the nrows x ncols block; returns the rank, pivots in piv."""
    cdef int r = 0, c, i, j, sel
    cdef i64 f, inv, tmp
    for c in range(ncols):
        if r == nrows:
            break
        sel = -1
        for i in range(r, nrows):
            if A[i * stride + c] != 0:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            for j in range(ncols):
                tmp = A[sel * stride + j]
                A[sel * stride + j] = A[r * stride + j]
                A[r * stride + j] = tmp
        inv = _inv(A[r * stride + c], p)
        for j in range(ncols):
            A[r * stride + j] = (A[r * stride + j] * inv) % p
        for i in range(nrows):
            if i != r and A[i * stride + c] != 0:
                f = A[i * stride + c]
                for j in range(ncols):
                    A[i * stride + j] = (A[i * stride + j] - f * A[r * stride + j]) % p
                    if A[i * stride + j] < 0:
                        A[i * stride + j] += p
        piv[r] = c
        r += 1
    return r


cdef class _Problem:
    cdef i64 p
    cdef int nv, n_ns, maxd, totd
    cdef int* dims
    cdef int* e
    cdef int* in_start
    cdef int* in_src
    cdef i64* in_mat        # per in-arrow, maxd x maxd block
    cdef i64* U             # per vertex, maxd x maxd rows
    cdef i64* W             # per vertex, totd x maxd image workspace
    cdef int* piv           # per vertex, maxd pivots
    cdef object cells

    def __cinit__(self, i64 p, dims, e, in_arrows, int n_ns):
        cdef int k, a, r, c, na
        self.p = p
        self.nv = len(dims)
        self.n_ns = n_ns
        self.maxd = max([1] + list(dims))
        # image rows into a vertex: one per (in-arrow, source basis vector)
        self.totd = max([1] + [sum(dims[src] for src, _ in arrows) for arrows in in_arrows])
        na = sum(len(x) for x in in_arrows)
        self.dims = <int*> malloc(self.nv * sizeof(int))
        self.e = <int*> malloc(self.nv * sizeof(int))
        self.in_start = <int*> malloc((self.nv + 1) * sizeof(int))
        self.in_src = <int*> malloc(max(1, na) * sizeof(int))
        self.in_mat = <i64*> calloc(max(1, na) * self.maxd * self.maxd, sizeof(i64))
        self.U = <i64*> calloc(self.nv * self.maxd * self.maxd, sizeof(i64))
        self.W = <i64*> calloc(self.nv * self.totd * self.maxd, sizeof(i64))
        self.piv = <int*> calloc(self.nv * self.maxd, sizeof(int))
        self.cells = {}
        a = 0
        for k in range(self.nv):
            self.dims[k] = dims[k]
            self.e[k] = e[k]
            self.in_start[k] = a
            for src, A in in_arrows[k]:
                self.in_src[a] = src
                for r in range(len(A)):
                    for c in range(len(A[r])):
                        self.in_mat[a * self.maxd * self.maxd + r * self.maxd + c] = A[r][c] % p
                a += 1
        self.in_start[self.nv] = a

    def __dealloc__(self):
        free(self.dims)
        free(self.e)
        free(self.in_start)
        free(self.in_src)
        free(self.in_mat)
        free(self.U)
        free(self.W)
        free(self.piv)

    cdef int image(self, int k):
        """Fill W[k] with the RREF of the images into vertex k; return its rank."""
        cdef int a, s, r, i, j, nrows = 0
        cdef int md = self.maxd
        cdef int mk = self.dims[k]
        cdef i64 acc
        cdef i64* Wk = self.W + k * self.totd * md
        cdef i64* A
        cdef i64* u
        for a in range(self.in_start[k], self.in_start[k + 1]):
            s = self.in_src[a]
            A = self.in_mat + a * md * md
            for r in range(self.e[s]):
                u = self.U + s * md * md + r * md
                for i in range(mk):
                    acc = 0
                    for j in range(self.dims[s]):
                        acc += A[i * md + j] * u[j]
                    Wk[nrows * md + i] = acc % self.p
                nrows += 1
        if nrows == 0:
            return 0
        return _rref(Wk, nrows, mk, md, self.p, self.piv + k * md)

    cdef object cell_count(self, int n, int k):
        key = (n, k)
        val = self.cells.get(key)
        if val is None:
            from .linalg import count_subspaces_cells
            val = count_subspaces_cells(n, k, self.p)
            self.cells[key] = val
        return val

    cdef object sinks(self):
        cdef int k, w
        total = 1
        for k in range(self.n_ns, self.nv):
            w = self.image(k)
            if w > self.e[k]:
                return 0
            total *= self.cell_count(self.dims[k] - w, self.e[k] - w)
        return total

    cdef object rec(self, int k):
        cdef int md = self.maxd
        cdef int m, w, need, n
        cdef int i, j, r, c, nfree, pos
        cdef i64* Wk
        cdef i64* Uk
        cdef int* wpiv
        cdef int comp[64]
        cdef int combo[64]
        cdef int ispiv[64]
        cdef int free_row[4096]
        cdef int free_col[4096]
        cdef i64 vals[4096]
        if k == self.n_ns:
            return self.sinks()
        m = self.dims[k]
        w = self.image(k)
        if w > self.e[k]:
            return 0
        need = self.e[k] - w
        n = m - w
        Wk = self.W + k * self.totd * md
        Uk = self.U + k * md * md
        wpiv = self.piv + k * md
        total = 0
        if m > 64:
            raise ValueError("vertex dimension too large for the compiled kernel")
        # complement coordinates of the image
        for c in range(m):
            ispiv[c] = 0
        for r in range(w):
            ispiv[wpiv[r]] = 1
        j = 0
        for c in range(m):
            if not ispiv[c]:
                comp[j] = c
                j += 1
        # first w rows of U_k are the image basis
        for r in range(w):
            for c in range(m):
                Uk[r * md + c] = Wk[r * md + c]
        for r in range(need):
            combo[r] = r
        while True:
            # free positions of this Schubert cell
            for c in range(n):
                ispiv[c] = 0
            for r in range(need):
                ispiv[combo[r]] = 1
            nfree = 0
            for r in range(need):
                for c in range(combo[r] + 1, n):
                    if not ispiv[c]:
                        free_row[nfree] = r
                        free_col[nfree] = c
                        vals[nfree] = 0
                        nfree += 1
            while True:
                for r in range(need):
                    for c in range(m):
                        Uk[(w + r) * md + c] = 0
                    Uk[(w + r) * md + comp[combo[r]]] = 1
                for i in range(nfree):
                    Uk[(w + free_row[i]) * md + comp[free_col[i]]] = vals[i]
                total += self.rec(k + 1)
                pos = nfree - 1
                while pos >= 0:
                    vals[pos] += 1
                    if vals[pos] < self.p:
                        break
                    vals[pos] = 0
                    pos -= 1
                if pos < 0:
                    break
            # next combination of pivot columns
            i = need - 1
            while i >= 0 and combo[i] == n - need + i:
                i -= 1
            if i < 0:
                break
            combo[i] += 1
            for j in range(i + 1, need):
                combo[j] = combo[j - 1] + 1
        return total


def count_submodules(p, dims, e, in_arrows, n_nonsink):
    for x, d in zip(e, dims):
        if x < 0 or x > d:
            return 0
    prob = _Problem(p, list(dims), list(e), in_arrows, n_nonsink)
    return prob.rec(0)

"""Independent oracle for values frozen in the C++ tests.

Run: python3 tests/oracle/derive.py
Uses sympy and exact fractions only; shares no code with the library.
"""
import itertools
import math
import random
from fractions import Fraction

import sympy as sp

q = sp.symbols("q")


def rook_count_bruteforce(k):
    count = 0
    for rows in itertools.product(range(k + 1), repeat=k):
        used = [r for r in rows if r]
        if len(used) == len(set(used)):
            count += 1
    return count


def partitions(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, maxpart), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def hook_count(lam):
    n = sum(lam)
    conj = [sum(1 for r in lam if r > c) for c in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // prod


def multi_count(comps):
    n = sum(sum(c) for c in comps)
    out = math.factorial(n)
    for c in comps:
        out //= math.factorial(sum(c))
        out *= hook_count(c)
    return out


def multipartitions(k, r):
    for sizes in itertools.product(range(k + 1), repeat=r):
        if sum(sizes) != k:
            continue
        for comps in itertools.product(*[list(partitions(s)) for s in sizes]):
            yield comps


def sum_d2(k, r, keep=lambda comps: True):
    return sum(multi_count(c) ** 2 for c in multipartitions(k, r) if keep(c))


# --- tensor space oracle at a fixed rational q ---------------------------------

def rmat(n, qv):
    N = n * n
    M = [[Fraction(0)] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            col = i * n + j
            if i == j:
                M[col][col] = qv
            else:
                M[j * n + i][col] += 1
                if i < j:
                    M[col][col] += qv - 1 / qv
    return M


def smat(n, deg, qv):
    R = rmat(n, qv)
    N = n * n
    M = [[Fraction(0)] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            col = i * n + j
            if deg[i] == deg[j]:
                for r in range(N):
                    M[r][col] = R[r][col]
            else:
                M[j * n + i][col] = Fraction(1)
    return M


def kron(A, B):
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def eye(N):
    return [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]


def mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    out = [[Fraction(0)] * p for _ in range(n)]
    for i in range(n):
        for l in range(m):
            a = A[i][l]
            if a:
                row = B[l]
                for j in range(p):
                    if row[j]:
                        out[i][j] += a * row[j]
    return out


def place(local, n, k, pos, width):
    return kron(kron(eye(n ** (pos - 1)), local), eye(n ** (k - pos - width + 1)))


def span_dim(gens, N):
    basis = {}

    def reduce(v):
        v = list(v)
        for p, row in basis.items():
            if v[p]:
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def insert(M):
        v = reduce([x for r in M for x in r])
        for p, x in enumerate(v):
            if x:
                row = [y / x for y in v]
                for pp in list(basis):
                    if basis[pp][p]:
                        f = basis[pp][p]
                        basis[pp] = [a - f * b for a, b in zip(basis[pp], row)]
                basis[p] = row
                return True
        return False

    queue = [eye(N)]
    insert(queue[0])
    h = 0
    while h < len(queue):
        for g in gens:
            nxt = mul(queue[h], g)
            if insert(nxt):
                queue.append(nxt)
        h += 1
    return len(basis)


def centralizer(m, k, u, qv):
    n = sum(m)
    deg = [j for j, mj in enumerate(m) for _ in range(mj)]
    R, S = rmat(n, qv), smat(n, deg, qv)
    Rinv = [[R[i][j] - (qv - 1 / qv) * (i == j) for j in range(n * n)] for i in range(n * n)]
    d = [[Fraction(u[deg[i]]) * (i == j) for j in range(n)] for i in range(n)]
    X = place(d, n, k, 1, 1)
    Ts = []
    for i in range(1, k):
        Ts.append(place(R, n, k, i, 2))
        X = mul(place(S, n, k, i, 2), X)
    for i in range(k - 1, 0, -1):
        X = mul(place(Rinv, n, k, i, 2), X)
    return span_dim(Ts + [X], n ** k)


def main():
    print("rook counts", [rook_count_bruteforce(k) for k in range(0, 6)])
    print("formula", [sum(math.comb(k, i) ** 2 * math.factorial(i) for i in range(k + 1)) for k in range(0, 6)])
    a_hat = lambda c: len(c[0]) <= 1
    print("sum d^2 A-hat k=1..4", [sum_d2(k, 2, a_hat) for k in range(1, 5)])
    print("|A-hat_k| k=0..4", [sum(1 for c in multipartitions(k, 2) if a_hat(c)) for k in range(0, 5)])
    print("|H-hat_k^(2)| k=0..4", [sum(1 for _ in multipartitions(k, 2)) for k in range(0, 5)])
    print("sum d^2 r=2", [sum_d2(k, 2) for k in range(1, 5)], "r=3", [sum_d2(k, 3) for k in range(1, 4)])
    print("SYT counts", {lam: hook_count(lam) for lam in [(3, 2), (2, 2, 1), (4, 2, 1), (3, 3)]})
    print("multi counts", {str(c): multi_count(c) for c in [((2, 1), (1,)), ((1,), (2, 1)), ((2,), (1, 1)), ((1,), (1,), (1,))]})

    u1, u2 = sp.symbols("u1 u2")
    s1 = sp.factor((u1 - u2) * (q ** -2 * u1 - u2) * (q ** -2 * u1 - q ** 2 * u1))
    s0 = sp.factor((0 - u2) * (-1 / q - q) * (0 - u2) * (0 - u2))
    print("p scalar u1!=0", s1, "| at u=(1,2):", sp.cancel(s1.subs({u1: 1, u2: 2})))
    print("p scalar u1=0", s0, "| at u2=1:", sp.cancel(s0.subs({u2: 1})))
    print("[3]!", sp.expand((1) * (1 + q ** 2) * (1 + q ** 2 + q ** 4)))
    print("cancel (q^4-1)/(q^2-q)", sp.cancel((q ** 4 - 1) / (q ** 2 - q)))

    qv = Fraction(7, 3)
    for m, k, u in [((1, 1), 2, (0, 1)), ((1, 1), 3, (0, 1)), ((1, 2), 2, (0, 1)), ((1, 2), 3, (0, 1)),
                    ((1, 3), 3, (0, 1)), ((3,), 3, (1,)), ((2, 1), 2, (2, 5))]:
        pred = sum(multi_count(c) ** 2 for c in multipartitions(k, len(m))
                   if all(len(c[j]) <= m[j] for j in range(len(m))))
        print("centralizer m=%s k=%d u=%s: span=%d predicted=%d" % (m, k, u, centralizer(m, k, u, qv), pred))


if __name__ == "__main__":
    random.seed(0)
    main()

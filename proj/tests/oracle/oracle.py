# Independent reference values for the frozen constants in the C++ tests.
# Exact arithmetic via fractions/sympy; logarithms via mpmath at 40 digits.
from fractions import Fraction as F
import itertools, math
import mpmath as mp
import sympy as sp

mp.mp.dps = 40


def margins(C):
    m = len(C)
    a = [sum(C[i]) for i in range(m)]
    b = [sum(C[i][j] for i in range(m)) for j in range(m)]
    return a, b, sum(a)


def acc(C):
    a, b, n = margins(C)
    return F(sum(C[i][i] for i in range(len(C))), n)


def ba(C):
    a, b, n = margins(C)
    m = len(C)
    return sum((F(C[i][i], a[i]) if a[i] else F(b[i], n)) for i in range(m)) / m


def sba(C):
    T = [list(r) for r in zip(*C)]
    return (ba(C) + ba(T)) / 2


def kappa(C):
    a, b, n = margins(C)
    s = sum(a[i] * b[i] for i in range(len(C)))
    den = n * n - s
    if den == 0:
        return F(1)
    return F(n * sum(C[i][i] for i in range(len(C))) - s, den)


def cc(C):
    a, b, n = margins(C)
    m = len(C)
    num = n * sum(C[i][i] for i in range(m)) - sum(a[i] * b[i] for i in range(m))
    d = (n * n - sum(x * x for x in b)) * (n * n - sum(x * x for x in a))
    if d == 0:
        raise ValueError("singular")
    return sp.nsimplify(num) / sp.sqrt(d)


def ce(C):
    a, b, n = margins(C)
    m = len(C)
    base = 2 * m - 2
    tot = mp.mpf(0)
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            for x, s in ((C[j][i], a[j] + b[j]), (C[i][j], a[j] + b[j])):
                if x:
                    p = mp.mpf(x) / s
                    tot += x * mp.log(p, base)
    return -tot / (2 * n)


def gm(tp, fn, fp, tn, r):
    n = tp + fn + fp + tn
    a1, a0, b1, b0 = tp + fn, fp + tn, tp + fp, fn + tn
    num = n * tp - a1 * b1
    s = (sp.Rational(a1 * a0) ** r + sp.Rational(b1 * b0) ** r) / 2
    return sp.nsimplify(num) / s ** sp.Rational(1, r)


def expectation(measure, a, b):
    m = len(a)
    n = sum(a)
    A = [i for i in range(m) for _ in range(a[i])]
    base = [j for j in range(m) for _ in range(b[j])]
    tot, cnt = 0, 0
    for B in set(itertools.permutations(base)):
        C = [[0] * m for _ in range(m)]
        for x, y in zip(A, B):
            C[x][y] += 1
        tot += measure(C)
        cnt += 1
    return tot / cnt


if __name__ == "__main__":
    B = [[4, 1], [2, 3]]  # BinaryCounts(3,2,1,4): rows true 0/1
    print("binary acc", acc(B), "ba", ba(B), "sba", sba(B), "kappa", kappa(B), "cc", cc(B))
    print("gm1", gm(3, 2, 1, 4, 1), "gm-1", gm(3, 2, 1, 4, -1), "gm2", gm(3, 2, 1, 4, 2))
    M3 = [[3, 1, 0], [2, 4, 1], [0, 2, 5]]
    print("m3 acc", acc(M3), "ba", ba(M3), "sba", sba(M3), "kappa", kappa(M3), "cc", cc(M3), sp.N(cc(M3), 20))
    print("m3 ce", ce(M3), "cd", mp.acos(sp.N(cc(M3), 40)) / mp.pi)
    print("ce [[0,6],[6,0]]", ce([[0, 6], [6, 0]]), "ce [[0,1],[0,2]]", ce([[0, 1], [0, 2]]))
    print("ce [[1,5],[5,1]]", ce([[1, 5], [5, 1]]))
    print("kappa fixtures", kappa([[1, 2], [1, 0]]), kappa([[1, 3], [1, 0]]))
    print("cc C1/C2", cc([[0, 1, 0], [0, 0, 1], [2, 0, 0]]), cc([[0, 1, 0], [1, 0, 1], [0, 1, 0]]))
    print("cc mon", cc([[1, 0, 0], [7, 0, 0], [0, 0, 1]]), cc([[1, 0, 0], [6, 1, 0], [0, 0, 1]]))
    print("acc baseline", expectation(acc, [5, 5], [4, 6]), expectation(acc, [5, 5], [1, 9]),
          expectation(acc, [1, 9], [1, 9]), expectation(acc, [2, 8], [8, 2]))
    print("ba baseline", expectation(ba, [5, 5], [4, 6]), "sba 3-class", expectation(sba, [2, 1, 1], [1, 1, 2]))
    cd = lambda C: mp.acos(sp.N(cc(C), 40)) / mp.pi
    print("cd baseline a=(1,2) b=(1,2)", expectation(cd, [1, 2], [1, 2]))

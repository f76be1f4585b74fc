"""Independent high-precision evaluation of the constants frozen into the C++ tests.

Run with `python3 tests/oracles/derive_values.py`; the printed values are the
ones hard-coded in tests/*.cpp.
"""
from mpmath import mp, mpf, cosh, sinh, acosh, log, sqrt, pi, e, exp, ceil

mp.dps = 50


def show(label, value):
    print(f"{label:48s} {mp.nstr(value, 20)}")


# Lorentz form / hyperboloid distances
show("<b, (sinh1,0,cosh1)>", -cosh(1))
show("C at d=2", cosh(2) - 1)

# Upper half-space
show("uhs (0,1)-(1,1)", acosh(mpf(3) / 2))
show("axis (1,1)", acosh(sqrt(2)))
show("pigeonhole D=2 a=0.1 n=4", (40 * e**2) ** 3)

# Margulis constants
show("kellerhals n=3", (6 * pi) ** -3)
show("kellerhals n=4", (6 * pi) ** -4)
eps = mpf("0.052")
show("tube R=e^-20 n=3", mpf(20) / 3 + log(eps) - log(4))
show("tube R=0.1 n=3", log(10) / 3 + log(eps) - log(4))
show("log2 R diam=10 n=3", -3 * (10 + log(4 / eps)) / log(2))
show("cusped reach t=5 B=2", 10 + log(10 / eps))

# Grigoriev arithmetic
show("l(1,1)", log(3, 2))
show("log2 L N=2 k=3 d=2 M=2", 1 + 2 * log(6, 2))
# symbolic bound n=3 t=1 c=1 eps=0.052: B_log2 = 81 log2 3
B_log2 = 81 * log(3, 2)
show("B_log2 n=3 t=1", B_log2)
lam = log(3 / log(2), 2) + log(mpf(2) ** B_log2 + log(4 / eps), 2)
show("lambda n=3 t=1 c=1", lam)

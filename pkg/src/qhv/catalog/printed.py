"""The sixteen worked examples (ell = 1, 2 of each theorem) as printed.

Each closed form is written out case by case in n mod 3, independently of
the general i-sums in ``qside`` and ``classical``, so the two act as
cross-checks of each other.  Here ``m = n // 3``.
"""

from __future__ import annotations

from fractions import Fraction

from ..pochhammer import q_pochhammers as qps, shifted_factorials as sfs

ZERO = Fraction(0)
T1, T2, T4, T5 = (Fraction(k, 3) for k in (1, 2, 4, 5))


def _q3(nums, dens, q, m):
    return qps(nums, q ** 3, m) / qps(dens, q ** 3, m)


def _cl(nums, dens, m):
    return sfs(nums, m) / sfs(dens, m)


def ex_a1(n, pt):
    q, a = pt.q, pt.a
    m, r = divmod(n, 3)
    if r == 0:
        return a ** m * (1 - a / q) / (1 - a * q ** (6 * m - 1)) * _q3([q, q * q], [q * a, a / q], q, m)
    if r == 1:
        return (a ** (m + 1) * q ** (3 * m) * (1 - q) / (1 - a * q ** (6 * m + 1))
                * _q3([q * q, q ** 4], [q * a, q * q * a], q, m))
    return ZERO


def ex_a2(n, pt):
    q, a = pt.q, pt.a
    m, r = divmod(n, 3)
    if r == 0:
        return (a ** m * (1 - a / q ** 2) * (1 - a / q)
                / ((1 - a * q ** (6 * m - 2)) * (1 - a * q ** (6 * m - 1)))
                * _q3([q, q * q], [a / q, a / q ** 2], q, m))
    if r == 1:
        return (a ** (m + 1) * q ** (3 * m - 1) * (1 - q * q) * (1 - a / q)
                / ((1 - a * q ** (6 * m - 1)) * (1 - a * q ** (6 * m + 1)))
                * _q3([q * q, q ** 4], [a / q, q * a], q, m))
    return (a ** (m + 2) * q ** (6 * m) * (1 - q) * (1 - q * q)
            / ((1 - a * q ** (6 * m + 1)) * (1 - a * q ** (6 * m + 2)))
            * _q3([q ** 4, q ** 5], [q * a, q * q * a], q, m))


def ex_c1(n, pt):
    # sqrt(q) = t, sqrt(a) = c, a^(m+1/2) = c^(2m+1), q^(3m+1/2) = t^(6m+1)
    t, c = pt.t, pt.c
    q, a = pt.q, pt.a
    m, r = divmod(n, 3)
    if r == 0:
        return a ** m * (t + c) / (t + q ** (3 * m) * c) * _q3([q, q * q], [q * a, a / q], q, m)
    if r == 1:
        return (c ** (2 * m + 1) * (q - 1) / ((t - c) * (1 + t ** (6 * m + 1) * c))
                * _q3([q * q, q ** 4], [q * a, q * q * a], q, m))
    return ZERO


def ex_c2(n, pt):
    t, c = pt.t, pt.c
    q, a = pt.q, pt.a
    m, r = divmod(n, 3)
    if r == 0:
        return (a ** m * (q * q - a) * (t + c) * (1 - t ** (6 * m - 3) * c)
                / ((q * q - q ** (6 * m) * a) * (1 - c / t ** 3) * (t + q ** (3 * m) * c))
                * _q3([q, q * q], [a / q, a / q ** 2], q, m))
    if r == 1:
        return (c ** (2 * m + 1) * (q * q - 1) * (t + c)
                / ((q * q - t * c) * (1 + t ** (6 * m - 1) * c) * (1 + t ** (6 * m + 1) * c))
                * _q3([q * q, q ** 4], [a / q, q * a], q, m))
    return (a ** (m + 1) * (1 - q) * (1 - q * q) * (1 - t ** (6 * m + 3) * c)
            / ((t - c) * (t ** 3 - c) * (1 + t ** (6 * m + 1) * c) * (1 - q ** (6 * m + 2) * a))
            * _q3([q ** 4, q ** 5], [q * a, q * q * a], q, m))


def _ex_reversal(n, pt, ell, lifted):
    """Examples of ``thm-e`` (``lifted=False``) and ``thm-g`` (``lifted=True``)."""
    c = pt.c
    q, b = pt.q, pt.b
    m, r = divmod(n, 3)
    if r == 0:
        return _q3([q, q * q], [q / b, q * q * b], q, m)
    if r == 1:
        head = c * (q ** ell - 1) if lifted else 1 - q ** ell
        return head / (1 - q ** ell * b) * _q3([q * q, q ** 4], [q * q / b, q ** 4 * b], q, m)
    if ell == 1:
        return ZERO
    head = q * b if lifted else 1
    return (head * (1 - q) * (1 - q * q) / ((1 - q * q * b) * (1 - q ** 3 * b))
            * _q3([q ** 4, q ** 5], [q ** 3 / b, q ** 6 * b], q, m))


def ex_b1(n, a):
    m, r = divmod(n, 3)
    if r == 0:
        return (3 * a - 1) / (3 * a + 6 * m - 1) * _cl([T1, T2], [a - T1, a + T1], m)
    if r == 1:
        return 1 / (3 * a + 6 * m + 1) * _cl([T2, T4], [T1 + a, T2 + a], m)
    return ZERO


def ex_b2(n, a):
    m, r = divmod(n, 3)
    if r == 0:
        return ((3 * a - 2) * (3 * a - 1) / ((3 * a + 6 * m - 2) * (3 * a + 6 * m - 1))
                * _cl([T1, T2], [a - T1, a - T2], m))
    if r == 1:
        return (2 * (3 * a - 1) / ((3 * a + 6 * m - 1) * (3 * a + 6 * m + 1))
                * _cl([T2, T4], [a - T1, a + T1], m))
    return 2 / ((3 * a + 6 * m + 1) * (3 * a + 6 * m + 2)) * _cl([T4, T5], [T1 + a, T2 + a], m)


def ex_d1(n, a):
    m, r = divmod(n, 3)
    if r == 0:
        return _cl([T1, T2], [a - T1, a + T1], m)
    if r == 1:
        return 1 / (1 - 3 * a) * _cl([T2, T4], [T1 + a, T2 + a], m)
    return ZERO


def ex_d2(n, a):
    m, r = divmod(n, 3)
    if r == 0:
        return ((3 * a - 2) * (a + 2 * m - 1) / ((a - 1) * (3 * a + 6 * m - 2))
                * _cl([T1, T2], [a - T1, a - T2], m))
    if r == 1:
        return 2 / (3 * (1 - a)) * _cl([T2, T4], [a - T1, a + T1], m)
    return (2 * (a + 2 * m + 1) / ((a - 1) * (3 * a - 1) * (3 * a + 6 * m + 2))
            * _cl([T4, T5], [T1 + a, T2 + a], m))


def _ex_classical_reversal(n, b, ell, negated):
    """Examples of ``thm-f`` (``negated=False``) and ``thm-h`` (``negated=True``)."""
    m, r = divmod(n, 3)
    if r == 0:
        return _cl([T1, T2], [T1 - b, T2 + b], m)
    if r == 1:
        return (-ell if negated else ell) / (3 * b + ell) * _cl([T2, T4], [T2 - b, T4 + b], m)
    if ell == 1:
        return ZERO
    return 2 / (3 * (b + 1) * (3 * b + 2)) * _cl([T4, T5], [1 - b, 2 + b], m)


PRINTED = {
    ("thm-a", 1): ex_a1,
    ("thm-a", 2): ex_a2,
    ("thm-b", 1): ex_b1,
    ("thm-b", 2): ex_b2,
    ("thm-c", 1): ex_c1,
    ("thm-c", 2): ex_c2,
    ("thm-d", 1): ex_d1,
    ("thm-d", 2): ex_d2,
    ("thm-e", 1): lambda n, pt: _ex_reversal(n, pt, 1, False),
    ("thm-e", 2): lambda n, pt: _ex_reversal(n, pt, 2, False),
    ("thm-f", 1): lambda n, b: _ex_classical_reversal(n, b, 1, False),
    ("thm-f", 2): lambda n, b: _ex_classical_reversal(n, b, 2, False),
    ("thm-g", 1): lambda n, pt: _ex_reversal(n, pt, 1, True),
    ("thm-g", 2): lambda n, pt: _ex_reversal(n, pt, 2, True),
    ("thm-h", 1): lambda n, b: _ex_classical_reversal(n, b, 1, True),
    ("thm-h", 2): lambda n, b: _ex_classical_reversal(n, b, 2, True),
}

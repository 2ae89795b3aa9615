"""Dense univariate polynomial arithmetic over F_p, for modular certificates.

Polynomials are lists of ints, index k = coefficient of z^k, trailing zeros
trimmed. Only what the one-sided squarefree/divisibility certificates need.
"""

from __future__ import annotations


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a: list[int]) -> int:
    return len(a) - 1


def mul_fp(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return trim(out)


def rem_fp(a: list[int], b: list[int], p: int) -> list[int]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = [c % p for c in a]
    trim(a)
    db = degree(b)
    inv_lead = pow(b[-1], p - 2, p)
    while degree(a) >= db and a:
        shift = degree(a) - db
        factor = a[-1] * inv_lead % p
        for j in range(db + 1):
            a[shift + j] = (a[shift + j] - factor * b[j]) % p
        trim(a)
    return a


def gcd_fp(a: list[int], b: list[int], p: int) -> list[int]:
    a = trim([c % p for c in a])
    b = trim([c % p for c in b])
    while b:
        a, b = b, rem_fp(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def derivative_fp(a: list[int], p: int) -> list[int]:
    return trim([k * c % p for k, c in enumerate(a)][1:])


def is_squarefree_fp(a: list[int], p: int) -> bool:
    """True iff gcd(a, a') is constant; valid only when a' != 0."""
    d = derivative_fp(a, p)
    if not d:
        return degree(trim(list(a))) <= 0
    return degree(gcd_fp(a, d, p)) == 0

"""Divisor-function machinery: d(n), D(M), strip counts, omega and F(w)."""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass

import numba
import numpy as np

from .lattice_core import check_n, icbrt

EULER_GAMMA = 0.577215664901532861
ZETA2 = 1.644934066848226436
TRIAL_DIVISION_LIMIT = 10**10
SIEVE_CAP = 10**8


@dataclass(frozen=True)
class StripSpec:
    """Integer window N <= xy <= n_hi standing in for the real strip N <= xy <= N + Delta."""

    N: int
    Delta: float
    n_hi: int


def narrow_strip(N: int) -> StripSpec:
    # floor(N^(1/3) / 2) == floor(floor(N^(1/3)) / 2)
    return StripSpec(N, 0.5 * N ** (1 / 3), N + icbrt(N) // 2)


def lemma_strip(N: int) -> StripSpec:
    return StripSpec(N, 2 * N ** (1 / 3), N + icbrt(8 * N))


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for p in small:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # these bases are deterministic for n < 3.3e24
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _rho(n: int) -> int:
    if n % 2 == 0:
        return 2
    rng = random.Random(n)
    while True:
        c = rng.randrange(1, n)
        f = lambda v: (v * v + c) % n  # noqa: E731
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = f(x)
            y = f(f(y))
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> Counter:
    out: Counter = Counter()
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] += 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if _is_probable_prime(m):
            out[m] += 1
            continue
        d = _rho(m)
        stack += [d, m // d]
    return out


def divisor_count(n: int) -> int:
    check_n(n)
    if n <= TRIAL_DIVISION_LIMIT:
        count = 1
        m = n
        p = 2
        while p * p <= m:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            count *= e + 1
            p += 1 if p == 2 else 2
        return count * (2 if m > 1 else 1)
    return math.prod(e + 1 for e in factorize(n).values())


def divisor_summatory(M: int) -> int:
    """D(M) = sum_{n<=M} d(n) by the hyperbola method, O(sqrt M)."""
    if M == 0:
        return 0
    check_n(M, limit=2 * 10**12)
    s = math.isqrt(M)
    return 2 * sum(M // k for k in range(1, s + 1)) - s * s


def strip_count(spec: StripSpec) -> int:
    if spec.n_hi < spec.N:
        return 0
    return divisor_summatory(spec.n_hi) - divisor_summatory(spec.N - 1)


def dirichlet_main_term(M: int) -> float:
    return M * math.log(M) + (2 * EULER_GAMMA - 1) * M


def primitive_pair_main_term(w: int) -> float:
    return w * math.log(w) / ZETA2


@numba.njit(cache=True)
def _linear_sieve(w):
    spf = np.zeros(w + 1, dtype=np.int32)
    omega = np.zeros(w + 1, dtype=np.int8)
    primes = np.empty(max(16, int(1.3 * w / max(1.0, np.log(max(w, 2)))) + 16), dtype=np.int32)
    n_primes = 0
    for i in range(2, w + 1):
        if spf[i] == 0:
            spf[i] = i
            primes[n_primes] = i
            n_primes += 1
            omega[i] = 1
        j = 0
        while j < n_primes:
            p = primes[j]
            if p > spf[i] or p * i > w:
                break
            spf[p * i] = p
            omega[p * i] = omega[i] + (1 if p != spf[i] else 0)
            j += 1
    return omega


def omega_sieve(w: int) -> np.ndarray:
    """omega(n), the number of distinct prime factors, for 0 <= n <= w (omega(0) = 0)."""
    if w < 1:
        raise ValueError("w must be positive")
    if w > SIEVE_CAP:
        raise MemoryError(f"sieve size {w} exceeds cap {SIEVE_CAP}")
    return _linear_sieve(w)


def primitive_pair_count(w: int, omega: np.ndarray | None = None) -> int:
    """F(w) = #{(a, b) : gcd(a, b) = 1, ab <= w} = sum_{n<=w} 2^omega(n)."""
    if omega is None:
        omega = omega_sieve(w)
    return int(np.sum(np.left_shift(np.int64(1), omega[1 : w + 1].astype(np.int64))))

"""Fourier/Dirichlet coefficient generation, ingestion and caching.

Exact integer data (the discriminant-form coefficients, divisor sums) is
generated with exact arithmetic; floating data (divisor powers for complex
exponents, ingested Maass coefficients) carries a normalization tag so
every consumer can check it got the convention it expects.
"""

import hashlib
import json
import math
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import (
    CacheChecksumError,
    CacheMissError,
    CacheVersionError,
    DomainError,
    NormalizationWarning,
    PoleError,
)
from .numerics import riemann_zeta

import warnings

ARITHMETIC = "arithmetic"
UNITARY = "unitary"


# ---------------------------------------------------------------------------
# spectral data


@dataclass(frozen=True)
class Holomorphic:
    """A holomorphic cusp/Eisenstein slot of even weight k >= 4."""

    weight: int

    def __post_init__(self):
        if self.weight % 2 != 0 or self.weight < 4:
            raise DomainError("full level admits only even weights >= 4, got k=%r"
                              % (self.weight,))


@dataclass(frozen=True)
class Maass:
    """A Maass slot: spectral parameter lam (lam = 2iR) and parity in {0,1}."""

    lam: complex
    parity: int

    def __post_init__(self):
        if self.parity not in (0, 1):
            raise DomainError("parity must be 0 or 1")


@dataclass(frozen=True)
class GL4:
    """A GL(4) slot: mu in C^4 with sum 0, eta in (Z/2)^4 with sum 0."""

    mu: tuple
    eta: tuple

    def __post_init__(self):
        if len(self.mu) != 4 or len(self.eta) != 4:
            raise DomainError("GL4 takes four mu and four eta entries")
        if any(e not in (0, 1) for e in self.eta):
            raise DomainError("eta entries must be 0 or 1")
        if sum(self.eta) % 2 != 0:
            raise DomainError("sum of eta must vanish mod 2 (central character)")
        if abs(sum(complex(m) for m in self.mu)) > 1e-12:
            raise DomainError("sum of mu must vanish")


SpectralData = (Holomorphic, Maass, GL4)


@dataclass
class CoefficientSeries:
    """Coefficients a_1..a_N plus the spectral/normalization metadata.

    ``values`` is 1-indexed through ``a(n)``; negative indices are never
    stored (reconstruct them with apply_parity).  ``meta`` holds exact side
    data such as the Eisenstein constant or the a_0 term.
    """

    spectral: object
    values: list
    normalization: str
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.normalization not in (ARITHMETIC, UNITARY):
            raise DomainError("normalization must be %r or %r" % (ARITHMETIC, UNITARY))

    @property
    def n_max(self):
        return len(self.values)

    def a(self, n):
        if n < 1 or n > self.n_max:
            raise DomainError("coefficient index %d outside 1..%d" % (n, self.n_max))
        return self.values[n - 1]

    def is_integer_series(self):
        return all(isinstance(v, int) for v in self.values)


# ---------------------------------------------------------------------------
# discriminant form coefficients (weight 12), exact


_CRT_PRIMES = (4194301, 4194287, 4194277, 4194271, 4194247)  # ~2^22 each


def _pentagonal_signs(n):
    """Dense coefficient vector of prod_m (1 - q^m) up to q^(n-1), as ints."""
    out = np.zeros(n, dtype=np.int64)
    out[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        sign = -1 if k % 2 else 1
        if g1 < n:
            out[g1] += sign
        if g2 < n:
            out[g2] += sign
        if g1 >= n:
            break
        k += 1
    return out


def _eta24_mod(n, p):
    """Coefficients of prod (1-q^m)^24 mod p, by repeated squaring.

    Chain E -> E^2 -> E^3 -> E^6 -> E^12 -> E^24 with full convolutions;
    int64 stays exact because p^2 * n < 2^63 for p ~ 2^22, n <= ~5e5.
    """
    e1 = _pentagonal_signs(n) % p

    def sq(a):
        return np.convolve(a, a)[:n] % p

    def mul(a, b):
        return np.convolve(a, b)[:n] % p

    e3 = mul(sq(e1), e1)
    return sq(sq(sq(e3)))


def delta_coefficients(n_max):
    """Exact integer coefficients of the weight-12 discriminant form.

    Computed from q prod_m (1 - q^m)^24 via the pentagonal-number sparse
    series and repeated squaring; the big-integer result is reassembled by
    CRT from ~22-bit prime moduli (values reach ~1e22 at n = 1e4, far past
    int64).  Cost is a few length-n integer convolutions.
    """
    n_max = int(n_max)
    if n_max < 1:
        raise DomainError("need n_max >= 1")
    residues = [_eta24_mod(n_max, p) for p in _CRT_PRIMES]
    modulus = 1
    for p in _CRT_PRIMES:
        modulus *= p
    # CRT reconstruction, centered to signed integers
    mults = []
    for p in _CRT_PRIMES:
        m_i = modulus // p
        mults.append(m_i * pow(m_i % p, p - 2, p))
    half = modulus // 2
    values = []
    for i in range(n_max):
        v = sum(int(r[i]) * mult for r, mult in zip(residues, mults)) % modulus
        values.append(v - modulus if v > half else v)
    return CoefficientSeries(Holomorphic(12), values, ARITHMETIC,
                             meta={"kind": "delta"})


def delta_coefficients_bruteforce(n_max):
    """Oracle: direct 24-fold polynomial multiplication with Python ints.

    O(24 n^2); only sensible for small n_max.  Used by tests to pin the
    CRT generator.
    """
    cur = [1] + [0] * (n_max - 1)
    for m in range(1, n_max):
        for _ in range(24):
            nxt = list(cur)
            for i in range(n_max - m):
                nxt[i + m] -= cur[i]
            cur = nxt
    return cur  # a(n) = cur[n-1]


# ---------------------------------------------------------------------------
# Eisenstein q-coefficients and divisor powers


def _bernoulli(k):
    """Exact Bernoulli number B_k (B_1 = -1/2 convention).

    Recurrence sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1.
    """
    b = [Fraction(1)]
    for m in range(1, k + 1):
        acc = Fraction(0)
        c = 1  # running binomial C(m+1, j)
        for j in range(m):
            acc += c * b[j]
            c = c * (m + 1 - j) // (j + 1)
        b.append(-acc / (m + 1))
    return b[k]


def eisenstein_constant(k):
    """The exact rational constant c_k = -2k / B_k in 1 + c_k sum sigma q^n."""
    if k % 2 != 0 or k < 4:
        raise DomainError("Eisenstein weight must be even and >= 4")
    return Fraction(-2 * k) / _bernoulli(k)


def sigma_table(power, n_max):
    """sigma_power(n) = sum of d^power over d | n, exact ints, n = 1..n_max."""
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d ** power
        for m in range(d, n_max + 1, d):
            out[m] += dp
    return out[1:]


def eisenstein_qcoeffs(k, n_max):
    """q-expansion slot for the weight-k Eisenstein partner.

    b_n = c_k sigma_(k-1)(n) for n >= 1, with b_0 = 1 and the exact
    rational c_k kept in ``meta`` separate from the integer divisor sums.
    """
    c_k = eisenstein_constant(k)
    sig = sigma_table(k - 1, int(n_max))
    values = [float(c_k) * s for s in sig]
    return CoefficientSeries(Holomorphic(k), values, ARITHMETIC,
                             meta={"kind": "eisenstein", "b0": 1,
                                   "constant": c_k, "divisor_sums": sig})


def divisor_power_coeffs(nu, n_max):
    """a_n = sum_{d | n} d^(-nu) for n = 1..n_max, with a_0 = zeta(nu) aside.

    These are the Fourier coefficients of the distribution-normalized
    Eisenstein object; a_0 has a pole at nu = 1, which is flagged in
    ``meta`` rather than raised (the n >= 1 coefficients stay entire).
    """
    nu = complex(nu)
    n = int(n_max)
    vals = np.zeros(n + 1, dtype=np.complex128)
    d = np.arange(1, n + 1, dtype=np.float64)
    powers = np.exp(-nu * np.log(d))
    for dd in range(1, n + 1):
        vals[dd::dd] += powers[dd - 1]
    meta = {"kind": "divisor_power", "nu": nu}
    if abs(nu - 1.0) < 1e-12:
        meta["a0"] = None
        meta["a0_pole"] = True
    else:
        meta["a0"] = riemann_zeta(nu)
        meta["a0_pole"] = False
    return CoefficientSeries(Maass(nu, 0), list(vals[1:]), ARITHMETIC, meta=meta)


# ---------------------------------------------------------------------------
# parity / sign rules


def gl4_duality_sign(eta, epsilon):
    """The sign eps1^eta1 * eps2^(eta1+eta2) * eps3^(eta1+eta2+eta3)."""
    if len(eta) != 4 or len(epsilon) != 3:
        raise DomainError("need four eta entries and three epsilon signs")
    if sum(eta) % 2 != 0:
        raise DomainError("eta must sum to 0 mod 2")
    if any(e not in (1, -1) for e in epsilon):
        raise DomainError("epsilon entries must be +-1")
    sign = 1
    acc = 0
    for j in range(3):
        acc += eta[j]
        if epsilon[j] == -1 and acc % 2 == 1:
            sign = -sign
    return sign


def apply_parity(series, n):
    """Coefficient at a signed index, reconstructed from the stored a_|n|.

    GL(2): a_(-n) = (-1)^parity a_n.  GL(4): pass a 3-tuple of signed
    indices for the triple (n1, n2, n3); the stored data covers (1, n, 1).
    n = 0 is a domain error (cuspidal data has no constant term).
    """
    if isinstance(n, tuple):
        return _apply_parity_gl4(series, n)
    n = int(n)
    if n == 0:
        raise DomainError("index 0 not defined for cuspidal data")
    base = series.a(abs(n))
    if n > 0:
        return base
    spec = series.spectral
    if isinstance(spec, Maass):
        parity = spec.parity
    elif isinstance(spec, Holomorphic):
        raise DomainError("holomorphic boundary data has one-sided support; "
                          "negative indices are not defined")
    else:
        raise DomainError("use a triple index for GL4 series")
    return -base if parity == 1 else base


def _apply_parity_gl4(series, triple):
    if not isinstance(series.spectral, GL4):
        raise DomainError("triple indices require a GL4 series")
    n1, n2, n3 = triple
    if 0 in (n1, n2, n3):
        raise DomainError("index 0 not defined for cuspidal data")
    if abs(n1) != 1 or abs(n3) != 1:
        raise DomainError("stored GL4 data covers indices (+-1, n, +-1) only")
    sign = gl4_duality_sign(series.spectral.eta,
                            (int(math.copysign(1, n1)),
                             int(math.copysign(1, n2)),
                             int(math.copysign(1, n3))))
    return sign * series.a(abs(n2))


# ---------------------------------------------------------------------------
# Hecke relation check


@dataclass
class HeckeReport:
    max_coprime_residual: float
    max_prime_power_residual: float
    pairs_checked: int
    exact: bool

    @property
    def max_residual(self):
        return max(self.max_coprime_residual, self.max_prime_power_residual)


def _prime_power_shift(series):
    """Exponent w in a_p a_{p^k} = a_{p^(k+1)} + p^w a_{p^(k-1)}."""
    if series.normalization == UNITARY:
        return 0
    spec = series.spectral
    if isinstance(spec, Holomorphic):
        return spec.weight - 1
    return 0


def check_hecke_relations(series):
    """Residuals of multiplicativity and the prime-power recursion.

    Exact (bool arithmetic on ints) when the series is integer-valued;
    float residuals otherwise.  a_1 must be 1 for the check to mean
    anything; a NormalizationWarning is issued if it is not.
    """
    n_max = series.n_max
    if n_max < 1:
        raise DomainError("empty series")
    if abs(complex(series.a(1)) - 1.0) > 1e-12:
        warnings.warn("series is not Hecke normalized (a_1 != 1)",
                      NormalizationWarning)
    exact = series.is_integer_series()
    w = _prime_power_shift(series)

    max_cop = 0.0
    max_pp = 0.0
    pairs = 0
    for m in range(2, n_max + 1):
        for n in range(m, n_max // m + 1):
            if math.gcd(m, n) == 1:
                r = series.a(m) * series.a(n) - series.a(m * n)
                max_cop = max(max_cop, abs(r))
                pairs += 1
    for p in _primes_upto(n_max):
        pk = p
        while pk * p <= n_max:
            prev = series.a(pk // p)
            r = series.a(p) * series.a(pk) - series.a(pk * p) - p ** w * prev
            max_pp = max(max_pp, abs(r))
            pairs += 1
            pk *= p
    return HeckeReport(float(max_cop), float(max_pp), pairs, exact)


def _primes_upto(n):
    if n < 2:
        return []
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return [int(p) for p in np.nonzero(sieve)[0]]


# ---------------------------------------------------------------------------
# Maass coefficient ingestion

_MAASS_HEADER_RE = re.compile(r"^#\s*(R|parity|normalization)\s+(\S+)\s*$")


def load_maass_coefficients(path, hecke_warn_threshold=1e-6):
    """Read a Maass coefficient file (see the format note below).

    Header lines:  ``# R <decimal>``, ``# parity <even|odd>``,
    ``# normalization <hecke|unitary>``.  Body lines: ``<n> <re> [<im>]``
    with n strictly increasing from 1 and no gaps.  The spectral parameter
    is stored as lam = 2iR.  A Hecke-relation sanity check runs on load;
    a residual above ``hecke_warn_threshold`` warns but does not fail.
    """
    headers = {}
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                m = _MAASS_HEADER_RE.match(line)
                if m:
                    headers[m.group(1)] = m.group(2)
                continue
            parts = line.split()
            if len(parts) not in (2, 3):
                raise DomainError("%s:%d: expected '<n> <re> [<im>]'" % (path, lineno))
            try:
                n = int(parts[0])
                re_v = float(parts[1])
                im_v = float(parts[2]) if len(parts) == 3 else 0.0
            except ValueError as exc:
                raise DomainError("%s:%d: %s" % (path, lineno, exc)) from exc
            rows.append((n, complex(re_v, im_v)))

    for key in ("R", "parity", "normalization"):
        if key not in headers:
            raise DomainError("%s: missing header '# %s ...'" % (path, key))
    if not rows:
        raise DomainError("%s: no coefficient rows" % path)
    expected = 1
    for n, _ in rows:
        if n != expected:
            raise DomainError("%s: body indices must run 1,2,...,N without gaps "
                              "(saw %d, expected %d)" % (path, n, expected))
        expected += 1

    r_value = float(headers["R"])
    parity_word = headers["parity"].lower()
    if parity_word not in ("even", "odd"):
        raise DomainError("%s: parity must be even or odd" % path)
    norm_word = headers["normalization"].lower()
    if norm_word not in ("hecke", "unitary"):
        raise DomainError("%s: normalization must be hecke or unitary" % path)

    values = [v for _, v in rows]
    if abs(values[0] - 1.0) > 1e-12:
        warnings.warn("%s: a_1 = %s but header declares %s normalization"
                      % (path, values[0], norm_word), NormalizationWarning)
    spec = Maass(2j * r_value, 0 if parity_word == "even" else 1)
    series = CoefficientSeries(spec, values, UNITARY,
                               meta={"kind": "maass", "R": r_value,
                                     "source": os.fspath(path)})
    report = check_hecke_relations(series)
    series.meta["hecke_residual"] = report.max_residual
    if report.max_residual > hecke_warn_threshold:
        warnings.warn("%s: Hecke residual %.3e above threshold %.1e"
                      % (path, report.max_residual, hecke_warn_threshold),
                      NormalizationWarning)
    return series


# ---------------------------------------------------------------------------
# cache

_CACHE_VERSION = 1


def _spectral_to_json(spec):
    if isinstance(spec, Holomorphic):
        return {"kind": "holomorphic", "weight": spec.weight}
    if isinstance(spec, Maass):
        lam = complex(spec.lam)
        return {"kind": "maass", "lam": [lam.real, lam.imag], "parity": spec.parity}
    if isinstance(spec, GL4):
        return {"kind": "gl4",
                "mu": [[complex(m).real, complex(m).imag] for m in spec.mu],
                "eta": list(spec.eta)}
    raise DomainError("unknown spectral data %r" % (spec,))


def _spectral_from_json(obj):
    kind = obj["kind"]
    if kind == "holomorphic":
        return Holomorphic(obj["weight"])
    if kind == "maass":
        return Maass(complex(*obj["lam"]), obj["parity"])
    if kind == "gl4":
        return GL4(tuple(complex(*m) for m in obj["mu"]), tuple(obj["eta"]))
    raise CacheVersionError("unknown spectral kind %r" % kind)


def _encode_values(values):
    if all(isinstance(v, int) for v in values):
        return "int", [str(v) for v in values]
    enc = []
    for v in values:
        v = complex(v)
        enc.append([repr(v.real), repr(v.imag)])
    return "complex", enc


def _decode_values(kind, enc):
    if kind == "int":
        return [int(v) for v in enc]
    return [complex(float(r), float(i)) for r, i in enc]


def cache_key(series):
    spec = _spectral_to_json(series.spectral)
    label = series.meta.get("kind", "series")
    spec_tag = "-".join(str(v) for v in spec.values() if not isinstance(v, list))
    return "%s_%s_%s_N%d" % (label, spec_tag, series.normalization, series.n_max)


class _DirLock:
    """Advisory lock serializing cache access per directory."""

    def __init__(self, cache_dir):
        self._path = os.path.join(cache_dir, ".lock")
        self._fh = None

    def __enter__(self):
        import fcntl
        self._fh = open(self._path, "a+")
        fcntl.flock(self._fh.fileno(), fcntl.LOCK_EX)
        return self

    def __exit__(self, *exc):
        import fcntl
        fcntl.flock(self._fh.fileno(), fcntl.LOCK_UN)
        self._fh.close()


def cache_store(series, cache_dir):
    """Persist a series; returns the file path.

    The payload is canonical JSON with a sha256 checksum; integer series
    round-trip bit exactly (decimal strings), complex ones via repr floats.
    """
    os.makedirs(cache_dir, exist_ok=True)
    vkind, enc = _encode_values(series.values)
    body = {
        "version": _CACHE_VERSION,
        "spectral": _spectral_to_json(series.spectral),
        "normalization": series.normalization,
        "value_kind": vkind,
        "n_max": series.n_max,
        "meta_kind": series.meta.get("kind", "series"),
        "values": enc,
    }
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(canonical.encode()).hexdigest()
    path = os.path.join(cache_dir, cache_key(series) + ".json")
    with _DirLock(cache_dir):
        with open(path, "w", encoding="utf-8") as fh:
            json.dump({"checksum": digest, "payload": body}, fh)
    return path


def cache_load(path_or_dir, key=None):
    """Load a series stored by cache_store.

    Accepts either a full path or (cache_dir, key).  Raises CacheMissError
    when absent, CacheVersionError / CacheChecksumError when unusable.
    """
    path = path_or_dir if key is None else os.path.join(path_or_dir, key + ".json")
    if not os.path.exists(path):
        raise CacheMissError("no cache entry at %s" % path)
    lock_dir = os.path.dirname(os.path.abspath(path))
    with _DirLock(lock_dir):
        with open(path, "r", encoding="utf-8") as fh:
            wrapper = json.load(fh)
    body = wrapper.get("payload")
    if body is None or "checksum" not in wrapper:
        raise CacheVersionError("%s: not a cache container" % path)
    if body.get("version") != _CACHE_VERSION:
        raise CacheVersionError("%s: version %r, expected %d"
                                % (path, body.get("version"), _CACHE_VERSION))
    canonical = json.dumps(body, sort_keys=True, separators=(",", ":"))
    digest = hashlib.sha256(canonical.encode()).hexdigest()
    if digest != wrapper["checksum"]:
        raise CacheChecksumError("%s: checksum mismatch" % path)
    values = _decode_values(body["value_kind"], body["values"])
    return CoefficientSeries(_spectral_from_json(body["spectral"]), values,
                             body["normalization"], meta={"kind": body["meta_kind"]})

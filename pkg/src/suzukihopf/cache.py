"""On-disk cache of basis product tables.

One JSON file per (N, n, mu, lam) and format version, carrying a sha256 of
its table.  A file that fails to parse or to match its checksum is ignored
and rebuilt.  The cache only saves time; results never depend on it.
"""

import hashlib
import json
import os
from pathlib import Path

from .algebra import BasisIndex, SuzukiAlgebra

FORMAT_VERSION = 1
ENV_VAR = "SUZUKIHOPF_CACHE_DIR"


def cache_path(cache_dir, params):
    mu = "p" if params.mu == 1 else "m"
    lam = "p" if params.lam == 1 else "m"
    return Path(cache_dir) / f"tables-v{FORMAT_VERSION}-N{params.N}-n{params.n}-{mu}{lam}.json"


def _encode(algebra):
    pos = algebra.position
    rows = []
    for b1 in algebra.basis:
        for b2 in algebra.basis:
            nf = algebra.tables.mono[b1, b2]
            rows.append(None if nf is None else [pos[nf[0]], nf[1]])
    return rows


def _checksum(payload):
    return hashlib.sha256(json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


def save(algebra, cache_dir):
    payload = {
        "format": FORMAT_VERSION,
        "params": algebra.params.as_dict(),
        "basis": [list(b) for b in algebra.basis],
        "mono": _encode(algebra),
    }
    path = cache_path(cache_dir, algebra.params)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(json.dumps({"checksum": _checksum(payload), "payload": payload}, sort_keys=True))
    os.replace(tmp, path)
    return path


def _load_mono(params, path):
    try:
        doc = json.loads(Path(path).read_text())
        payload = doc["payload"]
    except (OSError, ValueError, KeyError, TypeError):
        return None
    if doc.get("checksum") != _checksum(payload):
        return None
    if payload.get("format") != FORMAT_VERSION or payload.get("params") != params.as_dict():
        return None
    basis = [BasisIndex(*b) for b in payload["basis"]]
    n = len(basis)
    if len(payload["mono"]) != n * n:
        return None
    mono = {}
    for k, entry in enumerate(payload["mono"]):
        key = (basis[k // n], basis[k % n])
        mono[key] = None if entry is None else (basis[entry[0]], entry[1])
    return basis, mono


def load_algebra(params, cache_dir=None, conductor=None):
    """SuzukiAlgebra built from the cache when a valid entry exists, else fresh (and stored)."""
    cache_dir = cache_dir or os.environ.get(ENV_VAR)
    if not cache_dir:
        return SuzukiAlgebra(params, conductor=conductor)
    path = cache_path(cache_dir, params)
    if path.exists():
        got = _load_mono(params, path)
        if got is not None:
            basis, mono = got
            alg = SuzukiAlgebra(params, conductor=conductor, mono=mono)
            if alg.basis == basis:
                return alg
    alg = SuzukiAlgebra(params, conductor=conductor)
    try:
        save(alg, cache_dir)
    except OSError:
        pass
    return alg

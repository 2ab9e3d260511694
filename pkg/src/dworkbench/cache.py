"""On-disk result cache with checksummed, atomically written entries.

An entry is a JSON file holding the schema version, the group descriptor,
the artifact kind and the payload, plus a sha256 checksum of the canonical
payload encoding.  Loads validate everything and return None on any
mismatch, so a corrupted or stale entry is silently recomputed, never
trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

SCHEMA_VERSION = 1

KINDS = ("marks", "structure-constants", "decomp", "cartan")

ENV_CACHE_DIR = "DWORKBENCH_CACHE"


def _canonical(payload):
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def _checksum(payload):
    return hashlib.sha256(_canonical(payload).encode()).hexdigest()


def cache_path(cache_dir, descriptor, kind):
    safe = descriptor.replace("(", "_").replace(")", "").replace(":", "_")
    return os.path.join(cache_dir, "%s__%s__v%d.json" % (safe, kind, SCHEMA_VERSION))


def store(cache_dir, descriptor, kind, payload):
    """Atomically write an entry (temp file in the same directory + rename)."""
    if kind not in KINDS:
        raise ValueError("unknown cache kind %r" % kind)
    os.makedirs(cache_dir, exist_ok=True)
    record = {
        "schema_version": SCHEMA_VERSION,
        "descriptor": descriptor,
        "kind": kind,
        "payload": payload,
        "checksum": _checksum(payload),
    }
    path = cache_path(cache_dir, descriptor, kind)
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as handle:
            json.dump(record, handle)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def load(cache_dir, descriptor, kind):
    """Validated payload, or None when absent, corrupt or version-skewed."""
    path = cache_path(cache_dir, descriptor, kind)
    try:
        with open(path) as handle:
            record = json.load(handle)
    except (OSError, ValueError):
        return None
    if (
        not isinstance(record, dict)
        or record.get("schema_version") != SCHEMA_VERSION
        or record.get("descriptor") != descriptor
        or record.get("kind") != kind
        or "payload" not in record
        or record.get("checksum") != _checksum(record["payload"])
    ):
        return None
    return record["payload"]


def structure_constants_payload(sc):
    pairs = []
    for (j, k), sparse in sorted(sc.known_pairs().items()):
        pairs.append([j, k, [[l, str(a)] for l, a in sorted(sparse.items())]])
    return {"pairs": pairs}


def load_structure_constants(group, payload):
    from .descent import StructureConstants

    sc = StructureConstants(group)
    for j, k, entries in payload["pairs"]:
        sc._table[(j, k)] = {int(l): int(a) for l, a in entries}
    return sc

"""
Run journal for the geoline CLI and HTTP service.

Every direct, inverse and oracle evaluation is appended to a JSON-Lines file
as a tamper-evident record: the record body is hashed into ``digest`` and
``chain`` links that digest to the previous line. The journal is switched on
by ``GEOLINE_JOURNAL_PATH``; with no path configured every call is a no-op.
A FastAPI router returns the complete ordered journal.
"""

from __future__ import annotations

import hashlib
import json
import logging
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

from fastapi import APIRouter

from geoline.settings import get_settings

logger = logging.getLogger(__name__)

# FastAPI router
router = APIRouter(tags=["journal"])


def _path() -> Path | None:
    return get_settings().journal_path


def _dumps(obj: Any) -> str:
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)


def _digest(record: dict[str, Any]) -> str:
    body = {k: v for k, v in record.items() if k not in ("digest", "chain")}
    return hashlib.sha256(_dumps(body).encode()).hexdigest()


def _link(prev_chain: str, digest: str) -> str:
    return hashlib.sha256((prev_chain + digest).encode()).hexdigest()


def read_all() -> list[dict[str, Any]]:
    """Every journal record in write order; empty when the journal is off."""
    path = _path()
    if path is None or not path.exists():
        return []
    with path.open("r", encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


@router.get("/", summary="Full ordered run journal")
def full_journal() -> list[dict[str, Any]]:
    return read_all()


def verify() -> bool:
    """Recompute every digest and chain link."""
    prev_chain = ""
    for record in read_all():
        digest = _digest(record)
        if record.get("digest") != digest or record.get("chain") != _link(prev_chain, digest):
            return False
        prev_chain = record["chain"]
    return True


def write(*, operation: str, inputs: dict[str, Any], outputs: dict[str, Any]) -> None:
    """Append one record protected by the hash chain."""
    path = _path()
    if path is None:
        return

    record: dict[str, Any] = {
        "timestamp": datetime.now(timezone.utc).isoformat(),
        "operation": operation,
        "inputs": inputs,
        "outputs": outputs,
    }
    record["digest"] = _digest(record)

    path.parent.mkdir(parents=True, exist_ok=True)
    path.touch(exist_ok=True)
    try:
        with path.open("rb") as fh:
            last_line = next(reversed([line for line in fh if line.strip()]))
            prev_chain = json.loads(last_line)["chain"]
    except StopIteration:  # empty file ⇒ genesis entry
        prev_chain = ""

    record["chain"] = _link(prev_chain, record["digest"])

    with path.open("a", encoding="utf-8", buffering=1) as fh:
        fh.write(_dumps(record) + "\n")
    logger.debug("journal: %s appended to %s", operation, path)


# Test helpers (pytest only)
def _clear() -> None:
    """Truncate the journal."""
    path = _path()
    if path is not None and path.exists():
        path.write_text("")

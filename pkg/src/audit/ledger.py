# Copyright 2025 Badcompany
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import hashlib
import json
import logging
import time
import uuid
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Dict, Iterator

logger = logging.getLogger(__name__)

GENESIS_HASH = "0" * 64


@dataclass
class LedgerEntry:
    event_id: str
    timestamp: float
    run_id: str
    kind: str
    subject: Dict[str, Any]
    outcome: Dict[str, Any]
    previous_hash: str
    hash: str = ""


class VerificationLedger:
    """
    Append-only JSONL record of verification results, hash-chained so that an
    edited or dropped line breaks `verify_chain`.
    """

    def __init__(self, path: Path = Path("data/verification_ledger.jsonl")):
        self.path = Path(path)
        self.last_hash = GENESIS_HASH
        self._ensure_exists()
        self._recover_last_hash()

    def _ensure_exists(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if not self.path.exists():
            self.path.touch()

    def _recover_last_hash(self) -> None:
        last = None
        for entry in self.entries():
            last = entry
        if last is not None:
            self.last_hash = last.get("hash", GENESIS_HASH)

    @staticmethod
    def _calculate_hash(core: Dict[str, Any], previous_hash: str) -> str:
        payload = json.dumps(core, sort_keys=True) + previous_hash
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def entries(self) -> Iterator[Dict[str, Any]]:
        with self.path.open("r", encoding="utf-8") as handle:
            for line in handle:
                if line.strip():
                    yield json.loads(line)

    def record(self, run_id: str, kind: str, subject: Dict[str, Any], outcome: Dict[str, Any]) -> str:
        """Append one verification result and return its event id."""
        core = {
            "event_id": str(uuid.uuid4()),
            "timestamp": time.time(),
            "run_id": run_id,
            "kind": kind,
            "subject": subject,
            "outcome": outcome,
            "previous_hash": self.last_hash,
        }
        entry = LedgerEntry(**core, hash=self._calculate_hash(core, self.last_hash))
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(json.dumps(asdict(entry), sort_keys=True) + "\n")
        self.last_hash = entry.hash
        logger.debug(f"Ledger: {kind} | Hash: {entry.hash[:8]}...")
        return entry.event_id

    def verify_chain(self) -> bool:
        previous = GENESIS_HASH
        for line_no, entry in enumerate(self.entries(), start=1):
            stored = entry.pop("hash", "")
            if entry.get("previous_hash") != previous or self._calculate_hash(entry, previous) != stored:
                logger.error(f"Ledger chain broken at line {line_no} of {self.path}")
                return False
            previous = stored
        return True

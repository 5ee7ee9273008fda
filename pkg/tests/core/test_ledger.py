import json
import logging
import tempfile
import unittest
from pathlib import Path

from src.audit import GENESIS_HASH, VerificationLedger
from src.utils.logging_config import EVENTS_LOGGER, JsonFormatter, log_event


class TestVerificationLedger(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.path = Path(self.tmp.name) / "nested" / "ledger.jsonl"
        self.ledger = VerificationLedger(self.path)

    def tearDown(self):
        self.tmp.cleanup()

    def _record_two(self):
        self.ledger.record("run-1", "count", {"family": 1, "a": 1, "b": 1, "c": 0}, {"count": "4", "agrees": True})
        self.ledger.record("run-1", "identity", {"suite": "kuo"}, {"checked": 12, "failures": 0})

    def test_empty_ledger_verifies(self):
        self.assertTrue(self.path.exists())
        self.assertEqual(self.ledger.last_hash, GENESIS_HASH)
        self.assertTrue(self.ledger.verify_chain())

    def test_chain_links(self):
        self._record_two()
        entries = list(self.ledger.entries())
        self.assertEqual(len(entries), 2)
        self.assertEqual(entries[0]["previous_hash"], GENESIS_HASH)
        self.assertEqual(entries[1]["previous_hash"], entries[0]["hash"])
        self.assertTrue(self.ledger.verify_chain())

    def test_reopen_continues_chain(self):
        self._record_two()
        reopened = VerificationLedger(self.path)
        self.assertEqual(reopened.last_hash, self.ledger.last_hash)
        reopened.record("run-2", "sweep", {"max_perimeter": 9}, {"failures": 0})
        self.assertTrue(reopened.verify_chain())

    def test_tampering_breaks_chain(self):
        self._record_two()
        lines = self.path.read_text(encoding="utf-8").splitlines()
        first = json.loads(lines[0])
        first["outcome"]["count"] = "5"
        lines[0] = json.dumps(first, sort_keys=True)
        self.path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        self.assertFalse(VerificationLedger(self.path).verify_chain())

    def test_dropped_line_breaks_chain(self):
        self._record_two()
        lines = self.path.read_text(encoding="utf-8").splitlines()
        self.path.write_text(lines[1] + "\n", encoding="utf-8")
        self.assertFalse(VerificationLedger(self.path).verify_chain())


class TestEventLog(unittest.TestCase):
    def test_events_are_json_lines(self):
        records = []

        class Capture(logging.Handler):
            def emit(self, record):
                records.append(JsonFormatter().format(record))

        events = logging.getLogger(EVENTS_LOGGER)
        handler = Capture()
        events.addHandler(handler)
        previous_level = events.level
        events.setLevel(logging.INFO)
        try:
            log_event("sweep entry", {"family": 2, "agrees": True})
        finally:
            events.removeHandler(handler)
            events.setLevel(previous_level)

        self.assertEqual(len(records), 1)
        payload = json.loads(records[0])
        self.assertEqual(payload["message"], "sweep entry")
        self.assertEqual(payload["family"], 2)
        self.assertTrue(payload["agrees"])
        self.assertEqual(payload["source"], EVENTS_LOGGER)

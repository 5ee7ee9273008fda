from .ledger import GENESIS_HASH, LedgerEntry, VerificationLedger

__all__ = ["GENESIS_HASH", "LedgerEntry", "VerificationLedger"]

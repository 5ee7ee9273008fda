"""
Utility modules for dragon-tilings.
"""
from .logging_config import log_dict, log_event, log_separator, setup_logging

__all__ = ["log_dict", "log_event", "log_separator", "setup_logging"]

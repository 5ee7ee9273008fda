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

"""
Logging setup for the dragon-tilings CLI.

Console output goes to stderr so stdout carries only reports. A detailed log
file is written per run, and verification events go to a JSONL stream.
"""
import json
import logging
import sys
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Optional

from src.config import load_settings

EVENTS_LOGGER = "events"


class JsonFormatter(logging.Formatter):
    """Formats log records as JSON strings."""

    def format(self, record: logging.LogRecord) -> str:
        log_object = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "message": record.getMessage(),
            "source": record.name,
        }
        if hasattr(record, "extra_data") and isinstance(record.extra_data, dict):
            log_object.update(record.extra_data)
        return json.dumps(log_object, sort_keys=True, default=str)


class DragonFormatter(logging.Formatter):
    """Level-colored console format; plain detailed format for files."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
        "RESET": "\033[0m",
    }

    def __init__(self, use_colors: bool = True, detailed: bool = False):
        self.use_colors = use_colors
        self.detailed = detailed
        if detailed:
            fmt = "[%(asctime)s] [%(levelname)-8s] [%(name)s:%(lineno)d] %(message)s"
        else:
            fmt = "[%(asctime)s] [%(levelname)-8s] %(message)s"
        super().__init__(fmt, datefmt="%Y-%m-%d %H:%M:%S")

    def format(self, record: logging.LogRecord) -> str:
        if self.use_colors and hasattr(sys.stderr, "isatty") and sys.stderr.isatty():
            levelname = record.levelname
            if levelname in self.COLORS:
                record = logging.makeLogRecord(record.__dict__)
                record.levelname = f"{self.COLORS[levelname]}{levelname}{self.COLORS['RESET']}"
        return super().format(record)


def setup_logging(
    debug: Optional[bool] = None,
    log_dir: Optional[Path] = None,
    settings: Optional[Dict[str, Any]] = None,
) -> Path:
    """
    Configure console, file and event handlers.

    Args:
        debug: DEBUG level when True; defaults to `logging.debug` in settings
        log_dir: Directory for log files; defaults to `logging.log_dir`

    Returns:
        Path to the created log file
    """
    settings = settings or load_settings()
    logging_cfg = settings.get("logging", {})
    project_root = Path(settings.get("paths", {}).get("project_root", "."))

    if debug is None:
        debug = bool(logging_cfg.get("debug", False))
    if log_dir is None:
        log_dir = project_root / logging_cfg.get("log_dir", "logs")
    log_dir.mkdir(parents=True, exist_ok=True)

    timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
    log_file = log_dir / f"dragon_{timestamp}.log"

    root_logger = logging.getLogger()
    root_logger.setLevel(logging.DEBUG if debug else logging.INFO)
    root_logger.handlers.clear()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.DEBUG if debug else logging.INFO)
    console_handler.setFormatter(DragonFormatter(use_colors=True, detailed=False))
    root_logger.addHandler(console_handler)

    file_handler = logging.FileHandler(log_file, encoding="utf-8")
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(DragonFormatter(use_colors=False, detailed=True))
    root_logger.addHandler(file_handler)

    events_file = project_root / logging_cfg.get("events_file", "data/verification_events.jsonl")
    events_file.parent.mkdir(parents=True, exist_ok=True)
    events_handler = logging.FileHandler(events_file, encoding="utf-8")
    events_handler.setLevel(logging.INFO)
    events_handler.setFormatter(JsonFormatter())

    events_logger = logging.getLogger(EVENTS_LOGGER)
    events_logger.setLevel(logging.INFO)
    events_logger.propagate = False
    events_logger.handlers.clear()
    events_logger.addHandler(events_handler)

    logger = logging.getLogger(__name__)
    logger.debug(f"Logging initialized: debug={debug} file={log_file} events={events_file}")
    return log_file


def log_event(message: str, data: Dict[str, Any]) -> None:
    """Structured verification event (sweep entry, identity result)."""
    logging.getLogger(EVENTS_LOGGER).info(message, extra={"extra_data": data})


def log_separator(logger: logging.Logger, message: str = "", level: str = "INFO") -> None:
    """Log a visual separator for better readability."""
    log_method = getattr(logger, level.lower())
    log_method("=" * 80)
    if message:
        log_method(f"  {message}")
        log_method("=" * 80)


def log_dict(logger: logging.Logger, title: str, data: Dict[str, Any], level: str = "DEBUG") -> None:
    """Pretty-print a dictionary to logs."""
    log_method = getattr(logger, level.lower())
    log_method(f"{title}:")
    for line in json.dumps(data, indent=2, sort_keys=True, default=str).split("\n"):
        log_method(f"  {line}")

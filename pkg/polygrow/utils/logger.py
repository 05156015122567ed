"""
Custom Logger
Centralized logging system for polygrow
"""

import logging
import os
from datetime import datetime
from typing import Any, Dict, Optional

from polygrow.utils.helpers import format_duration


class Logger:
    _instance: Optional['Logger'] = None
    _logger: Optional[logging.Logger] = None
    _log_dir: Optional[str] = 'logs'
    _console_level: int = logging.INFO

    def __new__(cls):
        """Singleton pattern for logger"""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance._initialize_logger()
        return cls._instance

    @classmethod
    def configure(cls, log_dir: Optional[str] = 'logs', console_level: int = logging.INFO) -> 'Logger':
        """Re-initialize handlers; log_dir=None disables the file handler"""
        cls._log_dir = log_dir
        cls._console_level = console_level
        instance = cls()
        instance._logger = None
        instance._initialize_logger()
        return instance

    def _initialize_logger(self):
        """Initialize logging configuration"""
        if self._logger is not None:
            return

        self._logger = logging.getLogger('PolyGrow')
        self._logger.setLevel(logging.DEBUG)
        self._logger.propagate = False

        # Clear existing handlers
        for handler in list(self._logger.handlers):
            handler.close()
        self._logger.handlers.clear()

        detailed_formatter = logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(filename)s:%(lineno)d - %(message)s'
        )
        simple_formatter = logging.Formatter(
            '%(asctime)s - %(levelname)s - %(message)s'
        )

        if self._log_dir:
            os.makedirs(self._log_dir, exist_ok=True)
            file_handler = logging.FileHandler(
                self.get_log_file_path(),
                encoding='utf-8'
            )
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(detailed_formatter)
            self._logger.addHandler(file_handler)

        # Console goes to stderr so stdout stays clean for data
        console_handler = logging.StreamHandler()
        console_handler.setLevel(self._console_level)
        console_handler.setFormatter(simple_formatter)
        self._logger.addHandler(console_handler)

    def debug(self, message: str):
        """Log debug message"""
        self._logger.debug(message)

    def info(self, message: str):
        """Log info message"""
        self._logger.info(message)

    def warning(self, message: str):
        """Log warning message"""
        self._logger.warning(message)

    def error(self, message: str):
        """Log error message"""
        self._logger.error(message)

    def critical(self, message: str):
        """Log critical message"""
        self._logger.critical(message)

    def log_run_start(self, run_name: str, parameters: Dict[str, Any]):
        """Log the start of a classification run"""
        self.info("=" * 50)
        self.info(f"Starting run: {run_name}")
        self.debug(f"Parameters: {parameters}")
        self.info("=" * 50)

    def log_stratum(self, r_size: int, n_inf: int, n_fin: int, n_final: int):
        """Log the frontier sizes after a stratum has been grown"""
        self.info(f"r-size {r_size}: frontier inf={n_inf} fin={n_fin}, final so far={n_final}")

    def log_run_end(self, run_name: str, total: int, duration: float):
        """Log the end of a classification run"""
        self.info(f"Run completed: {run_name}")
        self.info(f"Total polygons: {total}")
        self.info(f"Duration: {format_duration(duration)}")
        self.info("=" * 50)

    def log_verdict(self, key: str, verdict: str, violated: str = ""):
        """Log a tuple verdict that deserves attention"""
        self.info(f"Verdict {verdict}: {key}")
        if violated:
            self.debug(f"Violated: {violated}")

    def get_log_file_path(self) -> str:
        """Get current log file path"""
        log_filename = datetime.now().strftime("polygrow_%Y%m%d.log")
        return os.path.join(self._log_dir or 'logs', log_filename)

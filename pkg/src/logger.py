"""
Logging system for verification sweeps.
Handles run ID generation, output folder management, and detailed per-run logging.
"""

import os
import uuid
import logging
from dataclasses import asdict
from datetime import datetime
from typing import Any, Dict

from config import DEFAULT_OUTPUT_DIR, LOG_FORMAT


class SweepLogger:
    """Manages logging and output organization for one verification run."""

    def __init__(self, output_base_dir: str = DEFAULT_OUTPUT_DIR):
        self.output_base_dir = output_base_dir
        self.run_id = self._generate_run_id()
        self.output_dir = os.path.join(output_base_dir, self.run_id)
        self.log_file_path = os.path.join(self.output_dir, "verification.log")

        os.makedirs(self.output_dir, exist_ok=True)
        self._setup_logging()
        self._log_initial_info()

    def _generate_run_id(self) -> str:
        """Generate a unique run ID with timestamp."""
        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        unique_id = str(uuid.uuid4())[:6]
        return f"{timestamp}_{unique_id}"

    def _setup_logging(self) -> None:
        self.logger = logging.getLogger(f"sweep_{self.run_id}")
        self.logger.setLevel(logging.INFO)
        self.logger.handlers.clear()

        file_handler = logging.FileHandler(self.log_file_path, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(LOG_FORMAT))
        self.logger.addHandler(file_handler)

        # Keep sweep records out of the console stream
        self.logger.propagate = False

    def _log_initial_info(self) -> None:
        self.logger.info(f"Run ID: {self.run_id}")
        self.logger.info(f"All verification outputs will be saved in: {self.output_dir}")
        self.logger.info("")
        self.logger.info(f"=== Verification started at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} ===")
        self.logger.info("")

    def log_sweep_config(self, config: Any) -> None:
        """Log the sweep configuration (a SweepConfig or a plain dict)."""
        values = asdict(config) if hasattr(config, "__dataclass_fields__") else dict(config)
        self.logger.info("=== Sweep Configuration ===")
        self.logger.info("[SWEEP]")
        for key, value in values.items():
            self.logger.info(f"{key}: {value}")
        self.logger.info("")
        self.logger.info("[OUTPUT_PATHS]")
        for key, path in self.get_output_paths().items():
            self.logger.info(f"{key}: {path}")
        self.logger.info("")

    def log_cell_outcome(self, outcome) -> None:
        """Log mismatches and skips of one cell; clean cells are not logged."""
        for m in outcome.mismatches:
            self.logger.warning(
                f"MISMATCH [{m.criterion}] {m.cell} {m.monomial}: expected {m.expected}, got {m.actual}")
        if outcome.skip is not None:
            self.logger.info(f"SKIP {outcome.skip.cell}: {outcome.skip.reason}")

    def log_sweep_summary(self, result) -> None:
        self.logger.info("")
        self.logger.info("=" * 50)
        self.logger.info("VERIFICATION SUMMARY")
        self.logger.info("=" * 50)
        self.logger.info(f"Mode: {result.mode}")
        self.logger.info(f"Cells checked: {result.cells_checked}")
        self.logger.info(f"Individual checks: {result.checks}")
        self.logger.info(f"Mismatches: {len(result.mismatches)}")
        self.logger.info(f"Skips: {len(result.skips)}")
        self.logger.info(f"Elapsed: {result.elapsed:.2f}s")
        self.logger.info("=" * 50)
        self.logger.info(f"=== Verification finished at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} ===")

    def get_output_paths(self) -> Dict[str, str]:
        return {
            'log_file_path': self.log_file_path,
            'results_csv_path': os.path.join(self.output_dir, "results.csv"),
        }

    def close(self) -> None:
        for handler in list(self.logger.handlers):
            handler.close()
            self.logger.removeHandler(handler)

"""
JSON Reporter
Writes run manifests, verification reports and batch reports as JSON
"""

import json
import os
import platform
import sys
from datetime import datetime
from typing import Any, Dict, List

from polygrow import __version__
from polygrow.io.records import RunManifest
from polygrow.utils.helpers import ensure_parent_directory, get_file_hash, get_timestamp
from polygrow.utils.logger import Logger


class JsonReporter:
    def __init__(self, config: Dict[str, Any]):
        """Initialize JSON Reporter"""
        self.config = config
        self.logger = Logger()
        self.report_dir = config.get('reporting', {}).get('report_directory', './reports')

    def _metadata(self, report_type: str) -> Dict[str, Any]:
        return {
            "report_type": report_type,
            "generated_at": datetime.now().isoformat(),
            "polygrow_version": __version__,
            "report_format_version": "1.0",
        }

    def _dump(self, filepath: str, data: Dict[str, Any]) -> str:
        ensure_parent_directory(filepath)
        with open(filepath, 'w', encoding='utf-8') as file:
            json.dump(data, file, indent=2, ensure_ascii=False)
        return filepath

    def write_manifest(self, manifest: RunManifest, dataset_path: str) -> str:
        """Write <dataset>.manifest.json next to a dataset file"""
        try:
            manifest.dataset_path = dataset_path
            manifest.dataset_sha256 = get_file_hash(dataset_path)
            filepath = f"{dataset_path}.manifest.json"
            self._dump(filepath, {
                "report_metadata": self._metadata("run_manifest"),
                "run": manifest.to_dict(),
                "environment": self._get_environment_info(),
            })
            self.logger.info(f"Run manifest written: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to write run manifest: {str(e)}")
            raise

    def write_verification_report(self, report_data: Dict[str, Any], filepath: str) -> str:
        try:
            self._dump(filepath, {
                "report_metadata": self._metadata("verification"),
                "verification": report_data,
            })
            self.logger.info(f"Verification report written: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to write verification report: {str(e)}")
            raise

    def generate_batch_report(self, batch_data: Dict[str, Any]) -> str:
        """Write batch_report_<id>_<timestamp>.json into the report directory"""
        try:
            batch_id = batch_data.get('batch_id', 'unknown')
            filename = f"batch_report_{batch_id}_{get_timestamp('filename')}.json"
            filepath = os.path.join(self.report_dir, filename)
            runs = batch_data.get('runs', [])
            self._dump(filepath, {
                "report_metadata": self._metadata("batch"),
                "batch_summary": {
                    "batch_id": batch_id,
                    "start_time": batch_data.get('start_time'),
                    "end_time": batch_data.get('end_time'),
                    "duration": batch_data.get('duration'),
                    "status": batch_data.get('status'),
                    "total_runs": len(runs),
                    "passed_runs": len([r for r in runs if r.get('status') == 'passed']),
                    "failed_runs": len([r for r in runs if r.get('status') == 'failed']),
                    "success_rate": self._calculate_success_rate(runs),
                },
                "runs": [self._prepare_run_data(run) for run in runs],
                "environment": self._get_environment_info(),
            })
            self.logger.info(f"Batch report generated: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to generate batch report: {str(e)}")
            raise

    def _prepare_run_data(self, run: Dict[str, Any]) -> Dict[str, Any]:
        return {
            "name": run.get('name'),
            "parameters": run.get('parameters'),
            "status": run.get('status'),
            "total": run.get('total'),
            "expected_total": run.get('expected_total'),
            "dataset_path": run.get('dataset_path'),
            "manifest_path": run.get('manifest_path'),
            "duration": run.get('duration'),
            "error": run.get('error'),
        }

    def _calculate_success_rate(self, runs: List[Dict[str, Any]]) -> float:
        if not runs:
            return 0.0
        passed = len([r for r in runs if r.get('status') == 'passed'])
        return round((passed / len(runs)) * 100, 2)

    def _get_environment_info(self) -> Dict[str, Any]:
        return {
            "platform": platform.platform(),
            "python_version": sys.version,
            "os": platform.system(),
            "hostname": platform.node(),
        }

    def load_report(self, filepath: str) -> Dict[str, Any]:
        """Load existing JSON report"""
        try:
            with open(filepath, 'r', encoding='utf-8') as file:
                return json.load(file)
        except Exception as e:
            self.logger.error(f"Failed to load JSON report: {str(e)}")
            raise

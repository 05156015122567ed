"""
Batch Runner
Executes the configured classification runs and reports them against their
expected totals
"""

import os
import time
import traceback
from datetime import datetime
from typing import Any, Dict, List, Optional

from polygrow.core.growing_engine import ClassificationDataset, GrowingEngine
from polygrow.io.records import RunManifest, write_records
from polygrow.reporting.json_reporter import JsonReporter
from polygrow.utils.config_validator import ConfigValidator
from polygrow.utils.helpers import ensure_directory_exists
from polygrow.utils.logger import Logger


class BatchRunner:
    def __init__(self, config_path: str = "config/master_config.json", threads: Optional[int] = None):
        """Initialize Batch Runner with configuration"""
        self.config_path = config_path
        self.logger = Logger()
        self.validator = ConfigValidator()
        self.config = self.validator.load_config(config_path)
        self.engine = GrowingEngine(self.config, threads=threads)
        self.json_reporter = JsonReporter(self.config)
        self.dataset_dir = self.config['reporting'].get('dataset_directory', './datasets')
        self.current_batch: Optional[Dict[str, Any]] = None

    def get_executable_runs(self) -> List[Dict[str, Any]]:
        """Get list of runs marked for execution, by priority"""
        executable = [run for run in self.config['classification_runs']
                      if str(run.get('execute', 'n')).lower() == 'y']
        executable.sort(key=lambda x: x.get('priority', 999))
        return executable

    def execute_all_runs(self, progress_callback=None) -> Dict[str, Any]:
        """Execute all enabled runs sequentially"""
        self.logger.info("Starting batch execution")
        batch_start = datetime.now()
        self.current_batch = {
            'batch_id': f"batch_{int(time.time())}",
            'start_time': batch_start.isoformat(),
            'runs': [],
            'status': 'running',
        }

        try:
            runs = self.get_executable_runs()
            if not runs:
                self.logger.warning("No classification runs marked for execution")

            for i, run_config in enumerate(runs):
                if progress_callback:
                    progress_callback(i, len(runs), run_config['name'])
                self.current_batch['runs'].append(self.execute_run(run_config))

        except Exception as e:
            self.logger.error(f"Batch execution failed: {str(e)}")
            self.current_batch['error'] = str(e)
            self.current_batch['status'] = 'error'

        finally:
            batch_end = datetime.now()
            self.current_batch['end_time'] = batch_end.isoformat()
            self.current_batch['duration'] = (batch_end - batch_start).total_seconds()
            if self.current_batch['status'] == 'running':
                failed = [r for r in self.current_batch['runs'] if r['status'] != 'passed']
                self.current_batch['status'] = 'failed' if failed else 'passed'
            self._generate_reports()

        return self.current_batch

    def _classify(self, run_config: Dict[str, Any]) -> ClassificationDataset:
        if run_config.get('zero_interior', False):
            return self.engine.classify_zero_interior()
        return self.engine.classify(run_config['r'], run_config['k'])

    def execute_run(self, run_config: Dict[str, Any]) -> Dict[str, Any]:
        """Execute a single classification run and persist its dataset"""
        name = run_config['name']
        self.logger.info(f"Executing run: {name}")
        run_start = datetime.now()
        parameters = {key: run_config[key] for key in ('r', 'k', 'zero_interior') if key in run_config}
        run_result: Dict[str, Any] = {
            'name': name,
            'parameters': parameters,
            'expected_total': run_config.get('expected_total'),
            'status': 'running',
            'error': None,
        }

        try:
            dataset = self._classify(run_config)
            ensure_directory_exists(self.dataset_dir)
            dataset_path = os.path.join(self.dataset_dir, f"{name}.jsonl")
            with open(dataset_path, 'w', encoding='utf-8') as file:
                write_records(file, dataset.polygons)

            manifest = RunManifest.from_dataset('batch', parameters, dataset)
            run_result['dataset_path'] = dataset_path
            run_result['manifest_path'] = self.json_reporter.write_manifest(manifest, dataset_path)
            run_result['total'] = len(dataset)

            expected = run_config.get('expected_total')
            run_result['status'] = 'passed' if expected is None or expected == len(dataset) else 'failed'
            if run_result['status'] == 'failed':
                run_result['error'] = f"expected {expected} polygons, found {len(dataset)}"
                self.logger.error(f"Run {name}: {run_result['error']}")

        except Exception as e:
            self.logger.error(f"Run execution failed: {str(e)}")
            run_result['status'] = 'failed'
            run_result['error'] = str(e)
            run_result['traceback'] = traceback.format_exc()

        finally:
            run_result['duration'] = (datetime.now() - run_start).total_seconds()

        return run_result

    def _generate_reports(self):
        try:
            if self.config['reporting'].get('json_reports', True):
                self.current_batch['report_path'] = self.json_reporter.generate_batch_report(self.current_batch)
        except Exception as e:
            self.logger.error(f"Report generation failed: {str(e)}")

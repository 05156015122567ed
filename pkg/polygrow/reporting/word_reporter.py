"""
Word Reporter
Generates Word documents summarizing a dataset verification
"""

import os
from datetime import datetime
from typing import Any, Dict, List, Optional

from docx import Document
from docx.enum.text import WD_ALIGN_PARAGRAPH
from docx.shared import Inches, Pt, RGBColor

from polygrow.utils.helpers import ensure_parent_directory
from polygrow.utils.logger import Logger

VERDICT_LABELS = {
    'a': 'Condition (a)',
    'b': 'Condition (b)',
    'c': 'Condition (c)',
    'd': 'Condition (d)',
    'exception': 'Exception',
}


class WordReporter:
    def __init__(self, config: Dict[str, Any]):
        """Initialize Word Reporter"""
        self.config = config
        self.logger = Logger()

    def generate_report(self, verification: Dict[str, Any], filepath: str,
                        source: str = "", images: Optional[List[str]] = None) -> str:
        """Write the verification summary, exceptions and plots to a .docx file"""
        try:
            document = Document()
            self._add_header(document, verification, source)
            self._add_summary(document, verification)
            self._add_verdicts(document, verification)
            self._add_exceptions(document, verification)
            for image in images or []:
                self._add_image(document, image)

            ensure_parent_directory(filepath)
            document.save(filepath)
            self.logger.info(f"Word report generated: {filepath}")
            return filepath
        except Exception as e:
            self.logger.error(f"Failed to generate Word report: {str(e)}")
            raise

    def _add_header(self, document: Document, verification: Dict[str, Any], source: str):
        title = document.add_heading('Ehrhart Tuple Verification', 0)
        title.alignment = WD_ALIGN_PARAGRAPH.CENTER

        info_para = document.add_paragraph()
        info_para.alignment = WD_ALIGN_PARAGRAPH.CENTER
        if source:
            info_para.add_run(f"Dataset: {source}\n")
        info_para.add_run(f"Generated: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}\n")
        info_para.add_run(f"Zero interior dataset: {'yes' if verification.get('zero_interior') else 'no'}")

    def _add_summary(self, document: Document, verification: Dict[str, Any]):
        document.add_heading('Summary', level=1)
        table = document.add_table(rows=1, cols=2)
        table.style = 'Table Grid'
        hdr_cells = table.rows[0].cells
        hdr_cells[0].text = 'Metric'
        hdr_cells[1].text = 'Value'

        violations = verification.get('violations', {})
        rows = [('Polygons', str(verification.get('total', 0))),
                ('Distinct tuples', str(len(verification.get('distinct_tuples', []))))]
        rows += [(f"Violations of {name}", str(len(found))) for name, found in violations.items()]

        for metric, value in rows:
            row_cells = table.add_row().cells
            row_cells[0].text = metric
            row_cells[1].text = value

        status_para = document.add_paragraph()
        unconditional = verification.get('unconditional_violations', 0)
        status_run = status_para.add_run(
            "Unconditional bounds hold" if unconditional == 0 else f"{unconditional} unconditional violations"
        )
        status_run.bold = True
        status_run.font.color.rgb = RGBColor(0, 128, 0) if unconditional == 0 else RGBColor(255, 0, 0)

    def _add_verdicts(self, document: Document, verification: Dict[str, Any]):
        document.add_heading('Verdicts', level=1)
        for verdict, count in verification.get('verdict_counts', {}).items():
            document.add_paragraph(f"{VERDICT_LABELS.get(verdict, verdict)}: {count}", style='List Bullet')

    def _add_exceptions(self, document: Document, verification: Dict[str, Any]):
        exceptions = verification.get('exceptions', [])
        if not exceptions:
            return
        document.add_heading('Exceptions', level=1)
        table = document.add_table(rows=1, cols=2)
        table.style = 'Table Grid'
        table.rows[0].cells[0].text = 'Canonical key'
        table.rows[0].cells[1].text = '(b1, i1, b2, i2)'
        for exception in exceptions:
            cells = table.add_row().cells
            cells[0].text = exception['key']
            cells[1].text = str(tuple(exception['tuple']))

    def _add_image(self, document: Document, image_path: str):
        """Embed a rendered plot"""
        try:
            if not os.path.exists(image_path):
                raise FileNotFoundError(image_path)
            image_para = document.add_paragraph()
            image_para.alignment = WD_ALIGN_PARAGRAPH.CENTER
            image_para.add_run().add_picture(image_path, width=Inches(5))

            caption_para = document.add_paragraph()
            caption_para.alignment = WD_ALIGN_PARAGRAPH.CENTER
            caption_run = caption_para.add_run(os.path.basename(image_path))
            caption_run.italic = True
            caption_run.font.size = Pt(9)
        except Exception as e:
            self.logger.warning(f"Failed to add image {image_path}: {str(e)}")
            placeholder_para = document.add_paragraph()
            placeholder_para.add_run(f"[Image not available: {image_path}]").italic = True

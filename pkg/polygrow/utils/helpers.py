"""
Helper Utilities
Small formatting and file helpers used throughout polygrow
"""

import hashlib
import os
from datetime import datetime
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union


def format_rational(value: Union[int, Fraction]) -> str:
    """Render an exact rational as p/q with q > 0 in lowest terms, or p for integers"""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def format_vertices(vertices: Sequence[Tuple[int, int]]) -> str:
    """Render scaled vertices as x0,y0;x1,y1;..."""
    return ";".join(f"{x},{y}" for x, y in vertices)


def format_duration(seconds: float) -> str:
    """Format duration in seconds to human readable format"""
    if seconds < 1:
        return f"{seconds*1000:.0f}ms"
    elif seconds < 60:
        return f"{seconds:.2f}s"
    elif seconds < 3600:
        minutes = int(seconds // 60)
        remaining_seconds = seconds % 60
        return f"{minutes}m {remaining_seconds:.0f}s"
    else:
        hours = int(seconds // 3600)
        remaining_minutes = int((seconds % 3600) // 60)
        return f"{hours}h {remaining_minutes}m"


def ensure_directory_exists(directory_path: str) -> str:
    """Ensure directory exists, create if it doesn't"""
    os.makedirs(directory_path, exist_ok=True)
    return directory_path


def ensure_parent_directory(file_path: str) -> str:
    """Create the directory holding file_path if needed"""
    parent = os.path.dirname(os.path.abspath(file_path))
    os.makedirs(parent, exist_ok=True)
    return file_path


def get_file_hash(filepath: str) -> Optional[str]:
    """Get SHA-256 hash of file"""
    try:
        digest = hashlib.sha256()
        with open(filepath, "rb") as f:
            for chunk in iter(lambda: f.read(65536), b""):
                digest.update(chunk)
        return digest.hexdigest()
    except OSError:
        return None


def get_timestamp(format_type: str = 'iso') -> str:
    """Get current timestamp in various formats"""
    now = datetime.now()

    if format_type == 'filename':
        return now.strftime('%Y%m%d_%H%M%S')
    elif format_type == 'display':
        return now.strftime('%Y-%m-%d %H:%M:%S')
    return now.isoformat()

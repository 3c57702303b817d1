import os
import glob
import re
import tempfile
from typing import Dict, List
import logging

logger = logging.getLogger(__name__)


class FileManager:
    """Flat-file storage for certificates and rendered figures"""

    @staticmethod
    def ensure_directory(directory: str) -> str:
        """Ensure a directory exists"""
        try:
            os.makedirs(directory, exist_ok=True)
            logger.info(f"Directory ensured: {directory}")
            return directory
        except Exception as e:
            logger.error(f"Failed to create directory {directory}: {e}")
            raise

    @staticmethod
    def write_text_atomic(path: str, text: str) -> str:
        """Write via a temp file in the same directory, then rename over the target"""
        directory = os.path.dirname(os.path.abspath(path))
        FileManager.ensure_directory(directory)
        fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp_", suffix=os.path.basename(path))
        try:
            with os.fdopen(fd, 'w', encoding='utf-8', newline='\n') as f:
                f.write(text)
            os.replace(tmp_path, path)
            logger.info(f"Saved: {path}")
            return path
        except Exception as e:
            logger.error(f"Failed to write {path}: {e}")
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise

    @staticmethod
    def read_text(path: str) -> str:
        with open(path, 'r', encoding='utf-8') as f:
            return f.read()

    @staticmethod
    def safe_filename(name: str) -> str:
        """Create a safe filename from a label such as G_{4,2}"""
        safe_name = re.sub(r'[^\w\s-]', '_', name).strip('_ ')
        return re.sub(r'[-\s_]+', '_', safe_name)

    @staticmethod
    def list_files(directory: str, pattern: str = "*.json") -> List[str]:
        return sorted(glob.glob(os.path.join(directory, pattern)))

    @staticmethod
    def get_folder_stats(directory: str) -> Dict[str, int]:
        """Count certificate files and bytes in a directory"""
        stats = {'json_files': 0, 'svg_files': 0, 'total_size': 0}
        try:
            if os.path.exists(directory):
                for file in os.listdir(directory):
                    file_path = os.path.join(directory, file)
                    if os.path.isfile(file_path):
                        stats['total_size'] += os.path.getsize(file_path)
                        if file.endswith('.json'):
                            stats['json_files'] += 1
                        elif file.endswith('.svg'):
                            stats['svg_files'] += 1
        except Exception as e:
            logger.error(f"Error getting folder stats for {directory}: {e}")
        return stats

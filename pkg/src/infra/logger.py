# -*- coding: utf-8 -*-
"""
bruhat_system - ログモジュール
標準エラー出力と日付別ログファイルへの出力を提供する（標準出力は JSON 専用）
"""

import sys
from datetime import datetime, timedelta
from pathlib import Path
from typing import Optional

LEVELS = {"DEBUG": 10, "INFO": 20, "SUCCESS": 20, "SKIP": 20, "WARNING": 30, "ERROR": 40}


def _get_base_path() -> Path:
    """実行ファイルのベースパスを取得"""
    if getattr(sys, "frozen", False):
        return Path(sys.executable).parent
    return Path(__file__).parent.parent.parent


def get_log_folder() -> Path:
    """ログフォルダのパスを取得する"""
    log_folder = _get_base_path() / "logs"
    log_folder.mkdir(exist_ok=True)
    return log_folder


class Logger:
    """ログ出力クラス"""

    def __init__(self):
        self.threshold: int = LEVELS["INFO"]
        self.to_file: bool = False
        self.retention_days: int = 30
        self._log_file: Optional[Path] = None

    def configure(self, level: str = "INFO", to_file: bool = False, retention_days: int = 30) -> None:
        """settings.yaml の logging セクションを反映する"""
        self.threshold = LEVELS.get(str(level).upper(), LEVELS["INFO"])
        self.to_file = bool(to_file)
        self.retention_days = int(retention_days)

    @property
    def log_file(self) -> Path:
        """今日のログファイルパスを取得"""
        today = datetime.now().strftime("%Y%m%d")
        return get_log_folder() / f"log_{today}.txt"

    def _write(self, level: str, message: str) -> None:
        if LEVELS[level] < self.threshold:
            return
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        log_line = f"[{timestamp}] [{level}] {message}\n"

        if self.to_file:
            try:
                with open(self.log_file, "a", encoding="utf-8") as f:
                    f.write(log_line)
            except Exception:
                pass  # ログ書き込み自体の失敗は黙殺

        try:
            sys.stderr.write(log_line)
        except Exception:
            pass

    def debug(self, message: str) -> None:
        self._write("DEBUG", message)

    def info(self, message: str) -> None:
        self._write("INFO", message)

    def warning(self, message: str) -> None:
        self._write("WARNING", message)

    def error(self, message: str) -> None:
        self._write("ERROR", message)

    def success(self, message: str) -> None:
        self._write("SUCCESS", message)

    def skip(self, message: str) -> None:
        self._write("SKIP", message)

    def rotate_logs(self, max_days: Optional[int] = None) -> int:
        """古いログファイルを削除する。削除した件数を返す"""
        days = self.retention_days if max_days is None else max_days
        cutoff_str = (datetime.now() - timedelta(days=days)).strftime("%Y%m%d")
        deleted = 0
        for f in get_log_folder().glob("log_*.txt"):
            if f.stem.replace("log_", "") < cutoff_str:
                try:
                    f.unlink()
                    deleted += 1
                except Exception:
                    pass
        return deleted


# シングルトンインスタンス
logger = Logger()

# -*- coding: utf-8 -*-
"""
bruhat_system - YAML設定管理モジュール
settings.yaml（上限・並列度・ログ）と goldens.yaml（ゴールデン問い合わせ）を読み込む
"""

import copy
import os
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml

from infra.logger import logger


def _get_base_path() -> Path:
    """プロジェクトルートのパスを取得"""
    if getattr(sys, "frozen", False):
        return Path(sys.executable).parent
    return Path(__file__).parent.parent.parent


DEFAULT_SETTINGS: Dict[str, Any] = {
    "limits": {
        "max_exhaustive_rank": 4,
        "max_weyl_order": 51840,
        "value_window": 4,
        "translation_bound": 3,
        "translation_bound_high_rank": 1,
    },
    "parallel": {"threads": 4, "env_var": "BRUHAT_THREADS"},
    "adlv": {"scale": 5, "max_defect_pairing": 8},
    "logging": {"level": "INFO", "file": False, "retention_days": 30},
    "output": {"indent": 2},
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    out = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            out[key] = _merge(out[key], value)
        else:
            out[key] = value
    return out


class Settings:
    """settings.yaml の内容（欠けた項目は既定値で補う）"""

    def __init__(self, data: Optional[Dict[str, Any]] = None):
        merged = _merge(DEFAULT_SETTINGS, data or {})
        limits = merged["limits"]
        self.max_exhaustive_rank: int = int(limits.get("max_exhaustive_rank", 4))
        self.max_weyl_order: int = int(limits.get("max_weyl_order", 51840))
        self.value_window: int = int(limits.get("value_window", 4))
        self.translation_bound: int = int(limits.get("translation_bound", 3))
        self.translation_bound_high_rank: int = int(limits.get("translation_bound_high_rank", 1))
        parallel = merged["parallel"]
        self._threads: int = int(parallel.get("threads", 4))
        self.threads_env_var: str = parallel.get("env_var", "BRUHAT_THREADS")
        adlv = merged["adlv"]
        self.adlv_scale: int = int(adlv.get("scale", 5))
        self.max_defect_pairing: int = int(adlv.get("max_defect_pairing", 8))
        logging_cfg = merged["logging"]
        self.log_level: str = str(logging_cfg.get("level", "INFO"))
        self.log_to_file: bool = bool(logging_cfg.get("file", False))
        self.log_retention_days: int = int(logging_cfg.get("retention_days", 30))
        self.indent: Optional[int] = merged["output"].get("indent", 2)

    @property
    def threads(self) -> int:
        """設定値を環境変数で上限付けしたスレッド数（常に 1 以上）"""
        count = self._threads
        raw = os.environ.get(self.threads_env_var, "").strip()
        if raw:
            try:
                count = min(count, int(raw))
            except ValueError:
                logger.warning(f"{self.threads_env_var} が整数ではありません: {raw}")
        return max(1, count)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "limits": {
                "max_exhaustive_rank": self.max_exhaustive_rank,
                "max_weyl_order": self.max_weyl_order,
                "value_window": self.value_window,
                "translation_bound": self.translation_bound,
                "translation_bound_high_rank": self.translation_bound_high_rank,
            },
            "parallel": {"threads": self._threads, "env_var": self.threads_env_var},
            "adlv": {"scale": self.adlv_scale, "max_defect_pairing": self.max_defect_pairing},
            "logging": {
                "level": self.log_level,
                "file": self.log_to_file,
                "retention_days": self.log_retention_days,
            },
            "output": {"indent": self.indent},
        }


class QueryConfig:
    """ゴールデン問い合わせ 1 件（サブコマンド名と引数）"""

    def __init__(self, data: Dict[str, Any]):
        self.id: str = data.get("id", "")
        self.name: str = data.get("name", "")
        self.command: str = data.get("command", "")
        self.enabled: bool = data.get("enabled", True)
        self.params: Dict[str, Any] = data.get("params", {}) or {}
        self._raw = data

    def to_dict(self) -> Dict[str, Any]:
        """YAML書き出し用の辞書を返す"""
        d: Dict[str, Any] = {"id": self.id, "name": self.name, "command": self.command}
        if not self.enabled:
            d["enabled"] = False
        if self.params:
            d["params"] = dict(self.params)
        return d

    def __repr__(self) -> str:
        return f"QueryConfig(id={self.id!r}, command={self.command!r})"


class ConfigManager:
    """YAML設定ファイルの管理クラス"""

    DEFAULT_CONFIG_DIR = "config"

    def __init__(self, config_dir: Optional[Path] = None):
        if config_dir is None:
            self.config_dir = _get_base_path() / self.DEFAULT_CONFIG_DIR
        else:
            self.config_dir = Path(config_dir)
        self.settings = Settings()
        self._queries: List[QueryConfig] = []
        self._loaded = False

    @property
    def settings_file(self) -> Path:
        return self.config_dir / "settings.yaml"

    @property
    def goldens_file(self) -> Path:
        return self.config_dir / "goldens.yaml"

    def load(self) -> None:
        """設定ファイルを読み込む"""
        self._load_settings()
        self._load_queries()
        self._loaded = True
        logger.debug(f"設定読み込み完了: {len(self._queries)} 問い合わせ")

    def _read_yaml(self, path: Path) -> Optional[Dict[str, Any]]:
        if not path.exists():
            logger.warning(f"設定ファイルが見つかりません: {path}")
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except Exception as e:
            logger.error(f"設定の読み込みエラー: {path.name}: {e}")
            return None
        if data is not None and not isinstance(data, dict):
            logger.error(f"設定の形式が不正です: {path.name}")
            return None
        return data

    def _load_settings(self) -> None:
        self.settings = Settings(self._read_yaml(self.settings_file))
        logger.configure(
            level=self.settings.log_level,
            to_file=self.settings.log_to_file,
            retention_days=self.settings.log_retention_days,
        )
        if self.settings.log_to_file:
            deleted = logger.rotate_logs()
            if deleted:
                logger.debug(f"古いログを削除しました: {deleted} 件")

    def _load_queries(self) -> None:
        data = self._read_yaml(self.goldens_file)
        if data and "queries" in data:
            self._queries = [QueryConfig(q) for q in data["queries"] or []]
        else:
            self._queries = []

    def get_all_queries(self) -> List[QueryConfig]:
        """有効な問い合わせを定義順に取得"""
        if not self._loaded:
            self.load()
        return [q for q in self._queries if q.enabled]

    def get_query_by_id(self, query_id: str) -> Optional[QueryConfig]:
        for q in self.get_all_queries():
            if q.id == query_id:
                return q
        return None

    # ──────── 保存系メソッド ────────

    def save_queries(self) -> None:
        data = {"queries": [q.to_dict() for q in self._queries]}
        self._write_yaml(self.goldens_file, data)
        logger.info(f"ゴールデン問い合わせを保存しました ({len(self._queries)} 件)")

    def _write_yaml(self, path: Path, data: dict) -> None:
        """YAML を書き出す (UTF-8, 可読フォーマット)"""
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            yaml.dump(data, f, allow_unicode=True, default_flow_style=False, sort_keys=False)

    # ──────── 問い合わせ CRUD ────────

    def add_query(self, data: Dict[str, Any]) -> QueryConfig:
        if not self._loaded:
            self.load()
        new_id = data.get("id", "")
        if any(q.id == new_id for q in self._queries):
            raise ValueError(f"ID が重複しています: {new_id}")
        query = QueryConfig(data)
        self._queries.append(query)
        return query

    def update_query(self, query_id: str, data: Dict[str, Any]) -> QueryConfig:
        if not self._loaded:
            self.load()
        for i, q in enumerate(self._queries):
            if q.id == query_id:
                new_id = data.get("id", query_id)
                if new_id != query_id and any(x.id == new_id for x in self._queries):
                    raise ValueError(f"ID が重複しています: {new_id}")
                data = dict(data)
                data.setdefault("id", query_id)
                self._queries[i] = QueryConfig(data)
                return self._queries[i]
        raise KeyError(f"問い合わせが見つかりません: {query_id}")

    def delete_query(self, query_id: str) -> None:
        if not self._loaded:
            self.load()
        before = len(self._queries)
        self._queries = [q for q in self._queries if q.id != query_id]
        if len(self._queries) == before:
            raise KeyError(f"問い合わせが見つかりません: {query_id}")

    def validate(self, known_commands: List[str]) -> List[Dict[str, Any]]:
        """ID 重複・必須項目・未知のコマンドを検出する"""
        issues = []
        seen = set()
        for q in self._queries:
            found = []
            if q.id in seen:
                found.append(f"IDが重複しています: {q.id}")
            seen.add(q.id)
            if not q.id:
                found.append("IDが空です")
            if q.command not in known_commands:
                found.append(f"未知のコマンドです: {q.command}")
            if found:
                issues.append({"query": q, "issues": found})
        if issues:
            logger.warning(f"設定にエラーのある問い合わせ: {len(issues)} 件")
        return issues

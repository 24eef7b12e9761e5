# -*- coding: utf-8 -*-
"""
bruhat_system - コマンド基底クラス
全てのサブコマンドプラグインが継承する抽象基底クラス
"""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

from core.errors import ConsistencyError, DomainRejection
from core.rootsys import RootSystem, build_root_system


@dataclass
class CommandResult:
    """コマンド実行結果。data は JSON 出力の本体"""

    success: bool
    message: str = ""
    error: Optional[Dict[str, Any]] = None
    data: Any = None
    exit_code: int = 0
    started_at: Optional[datetime] = None
    finished_at: Optional[datetime] = None
    # --pretty で表にする data 内のキー
    table_key: Optional[str] = None

    @property
    def elapsed_seconds(self) -> float:
        if self.started_at and self.finished_at:
            return (self.finished_at - self.started_at).total_seconds()
        return 0.0

    @property
    def elapsed_str(self) -> str:
        secs = self.elapsed_seconds
        return f"{int(secs // 60):02d}:{int(secs % 60):02d}"

    def payload(self) -> Any:
        return self.data if self.success else {"error": self.error}


def failure(code: str, message: str, **detail: Any) -> CommandResult:
    return CommandResult(
        success=False,
        message=message,
        error={"code": code, "message": message, "detail": detail},
        exit_code=1,
    )


# 進捗コールバック型: (message: str, percent: float) -> None
ProgressCallback = Callable[[str, float], None]


class CommandBase(ABC):
    """サブコマンドプラグインの基底クラス"""

    COMMAND_NAME: str = ""          # サブコマンド名（PARAM_SCHEMAS のキーと対応）
    COMMAND_LABEL: str = ""
    COMMAND_DESCRIPTION: str = ""

    def __init__(self, settings=None, config=None):
        self.settings = settings
        self.config = config
        self._progress_callback: Optional[ProgressCallback] = None

    def set_progress_callback(self, callback: ProgressCallback) -> None:
        self._progress_callback = callback

    def _notify_progress(self, message: str, percent: float = -1) -> None:
        if self._progress_callback:
            self._progress_callback(message, percent)

    def root_system(self, params: Dict[str, Any]) -> RootSystem:
        label = str(params.get("type") or "").strip()
        if self.settings is None:
            return build_root_system(label)
        return build_root_system(label, self.settings.max_weyl_order)

    @property
    def threads(self) -> int:
        return self.settings.threads if self.settings is not None else 1

    @abstractmethod
    def execute(self, params: Dict[str, Any]) -> CommandResult:
        """params は PARAM_SCHEMAS の key を持つ辞書"""

    def validate_params(self, params: Dict[str, Any]) -> List[str]:
        """必須項目の欠落を調べる。問題のリスト（空なら OK）"""
        from core.param_schema import get_param_schema

        issues = []
        for f in get_param_schema(self.COMMAND_NAME).get("fields", []):
            if f.get("required") and params.get(f["key"]) in (None, ""):
                issues.append(f"{f['label']} は必須です")
        return issues

    def execute_safe(self, params: Dict[str, Any]) -> CommandResult:
        """例外を CommandResult に変換して返す"""
        started = datetime.now()
        try:
            result = self.execute(params)
        except DomainRejection as e:
            result = CommandResult(success=False, message=e.message, error=e.to_dict(), exit_code=1)
        except ConsistencyError as e:
            result = CommandResult(success=False, message=str(e), error=e.to_dict(), exit_code=1)
        except Exception as e:
            result = failure("internal", f"{type(e).__name__}: {e}")
        result.started_at = started
        result.finished_at = datetime.now()
        return result

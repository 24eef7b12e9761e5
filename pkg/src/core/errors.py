# -*- coding: utf-8 -*-
"""
bruhat_system - 例外定義
入力拒否（DomainRejection）と内部整合性違反（ConsistencyError）
"""

from typing import Any, Dict, Optional


class DomainRejection(ValueError):
    """ドメイン上不正な入力の拒否。CLI では終了ステータス 1 になる"""

    def __init__(self, code: str, message: str, **detail: Any):
        super().__init__(message)
        self.code = code
        self.message = message
        self.detail: Dict[str, Any] = detail

    def to_dict(self) -> Dict[str, Any]:
        """JSON エラーオブジェクト"""
        return {"code": self.code, "message": self.message, "detail": dict(self.detail)}


class ConsistencyError(RuntimeError):
    """証明済みの恒等式が実行時に破れた（実装バグの兆候）"""

    def __init__(self, message: str, detail: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.detail: Dict[str, Any] = detail or {}

    def to_dict(self) -> Dict[str, Any]:
        return {"code": "consistency", "message": self.message, "detail": dict(self.detail)}

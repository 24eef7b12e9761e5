# -*- coding: utf-8 -*-
"""
bruhat_system - verify コマンド
不変量の検証スイートを実行するプラグイン
"""

from typing import Any, Dict

from core.command_base import CommandBase, CommandResult
from core.command_manager import register_command
from core.verify import make_context, run_suite


@register_command
class VerifyCommand(CommandBase):
    """検証スイート"""

    COMMAND_NAME = "verify"
    COMMAND_LABEL = "検証スイート"
    COMMAND_DESCRIPTION = "不変量の検査群を実行する"

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        system = self.root_system(params)
        ctx = make_context(system, params.get("window"), self.settings, bool(params.get("force")), self.config)
        summaries = run_suite(params["suite"], ctx)
        ok = all(s.ok for s in summaries)
        data = {
            "suite": params["suite"],
            "type": system.cartan_label,
            "ok": ok,
            "suites": [s.to_dict() for s in summaries],
            "checks": [dict(c.to_dict(), suite=s.suite) for s in summaries for c in s.checks],
        }
        if ok:
            return CommandResult(success=True, message="all checks passed", data=data, table_key="checks")
        failed = sum(c.failed for s in summaries for c in s.checks)
        return CommandResult(
            success=False,
            message=f"{failed} checks failed",
            error={"code": "verification_failed", "message": f"{failed} checks failed", "detail": data},
            data=data,
            exit_code=1,
            table_key="checks",
        )

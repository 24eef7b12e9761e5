# -*- coding: utf-8 -*-
"""
bruhat_system - goldens コマンド
goldens.yaml のゴールデン問い合わせを一覧・一括実行・検査・編集するプラグイン
"""

import shlex
from typing import Any, Dict, List, Tuple

from core.command_base import CommandBase, CommandResult, failure
from core.command_manager import CommandManager, register_command, registry
from core.config_manager import ConfigManager, QueryConfig
from core.errors import DomainRejection
from core.param_schema import command_to_argv, parse_command
from infra.logger import logger

# 問い合わせ行として受け付けないコマンド（goldens 自身の入れ子実行を防ぐ）
_EXCLUDED = {"goldens"}


def query_line(query: QueryConfig) -> str:
    """問い合わせをコマンド行の文字列に直す"""
    return shlex.join(command_to_argv(query.command, query.params))


def parse_query_line(line: str) -> Tuple[str, Dict[str, Any]]:
    """コマンド行を (サブコマンド名, パラメータ) に解析する"""
    try:
        argv = shlex.split(line or "")
        if "-h" in argv or "--help" in argv:
            raise ValueError(line)
        command, params = parse_command(argv)
    except (SystemExit, ValueError):
        raise DomainRejection("bad_query", f"cannot parse query line: {line}", query=line)
    if command in _EXCLUDED:
        raise DomainRejection("bad_query", f"{command} cannot be stored as a golden query", query=line)
    # 既定値 (None / False) の項目は保存しない
    return command, {k: v for k, v in params.items() if v is not None and v is not False}


@register_command
class GoldensCommand(CommandBase):
    """ゴールデン問い合わせの管理"""

    COMMAND_NAME = "goldens"
    COMMAND_LABEL = "ゴールデン問い合わせ"
    COMMAND_DESCRIPTION = "goldens.yaml の一覧・一括実行・検査・編集を行う"

    def validate_params(self, params: Dict[str, Any]) -> List[str]:
        issues = super().validate_params(params)
        action = params.get("action")
        if action in ("add", "update", "delete") and not params.get("id"):
            issues.append("id は必須です")
        if action in ("add", "update") and not params.get("query"):
            issues.append("query は必須です")
        return issues

    @property
    def manager(self) -> ConfigManager:
        if self.config is None:
            self.config = ConfigManager()
            self.config.load()
        return self.config

    def execute(self, params: Dict[str, Any]) -> CommandResult:
        action = params["action"]
        handler = getattr(self, f"_{action}")
        return handler(params)

    # ──────── 参照系 ────────

    def _list(self, params: Dict[str, Any]) -> CommandResult:
        self.manager.get_all_queries()
        rows = [
            {"id": q.id, "name": q.name, "command": q.command, "enabled": q.enabled, "line": query_line(q)}
            for q in self.manager._queries
        ]
        return CommandResult(success=True, message=f"{len(rows)} queries",
                             data={"queries": rows}, table_key="queries")

    def _validate(self, params: Dict[str, Any]) -> CommandResult:
        self.manager.get_all_queries()
        issues = self.manager.validate(registry.get_all_names())
        rows = [{"id": item["query"].id, "issues": item["issues"]} for item in issues]
        data = {"ok": not rows, "queries": len(self.manager._queries), "issues": rows}
        if rows:
            result = failure("invalid_goldens", f"{len(rows)} invalid queries", issues=rows)
            result.data = data
            return result
        return CommandResult(success=True, message="all queries valid", data=data)

    def _run(self, params: Dict[str, Any]) -> CommandResult:
        runner = CommandManager(self.manager)

        def on_progress(current: int, total: int, message: str) -> None:
            logger.info(f"[{current}/{total}] {message}" if total else message)

        runner.set_progress_callback(on_progress)
        if params.get("id"):
            query = self.manager.get_query_by_id(params["id"])
            if query is None:
                raise DomainRejection("unknown_query", f"unknown or disabled golden query: {params['id']}", id=params["id"])
            result = runner.run_query(query)
            data = {"id": query.id, "success": result.success, "exit_code": result.exit_code,
                    "output": result.payload()}
            if result.success:
                return CommandResult(success=True, message=f"{query.id} ok", data=data)
            out = failure("golden_failed", f"{query.id} failed", id=query.id)
            out.data = data
            return out

        counts = runner.run_goldens()
        if counts["failed"]:
            out = failure("golden_failed", f"{counts['failed']} queries failed", **counts)
            out.data = counts
            return out
        return CommandResult(success=True, message="goldens ok", data=counts)

    # ──────── 編集系 ────────

    def _add(self, params: Dict[str, Any]) -> CommandResult:
        command, query_params = parse_query_line(params["query"])
        data = {"id": params["id"], "name": params.get("name") or params["id"],
                "command": command, "params": query_params}
        try:
            query = self.manager.add_query(data)
        except ValueError:
            raise DomainRejection("duplicate_id", f"duplicate golden query id: {params['id']}", id=params["id"])
        self.manager.save_queries()
        return CommandResult(success=True, message=f"added {query.id}", data=query.to_dict())

    def _update(self, params: Dict[str, Any]) -> CommandResult:
        command, query_params = parse_query_line(params["query"])
        self.manager.get_all_queries()
        current = next((q for q in self.manager._queries if q.id == params["id"]), None)
        if current is None:
            raise DomainRejection("unknown_query", f"unknown golden query: {params['id']}", id=params["id"])
        query = self.manager.update_query(params["id"], {
            "name": params.get("name") or current.name,
            "command": command,
            "enabled": current.enabled,
            "params": query_params,
        })
        self.manager.save_queries()
        return CommandResult(success=True, message=f"updated {query.id}", data=query.to_dict())

    def _delete(self, params: Dict[str, Any]) -> CommandResult:
        try:
            self.manager.delete_query(params["id"])
        except KeyError:
            raise DomainRejection("unknown_query", f"unknown golden query: {params['id']}", id=params["id"])
        self.manager.save_queries()
        return CommandResult(success=True, message=f"deleted {params['id']}", data={"deleted": params["id"]})

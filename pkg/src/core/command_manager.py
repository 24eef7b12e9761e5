# -*- coding: utf-8 -*-
"""
bruhat_system - コマンド管理モジュール
サブコマンドプラグインの登録・検索・実行と、ゴールデン問い合わせの一括実行
"""

from datetime import datetime
from typing import Any, Callable, Dict, List, Optional, Type

from core.command_base import CommandBase, CommandResult, failure
from core.config_manager import ConfigManager, QueryConfig
from infra.logger import logger


class CommandRegistry:
    """サブコマンドプラグインのレジストリ"""

    def __init__(self):
        self._registry: Dict[str, Type[CommandBase]] = {}

    def register(self, command_class: Type[CommandBase]) -> None:
        name = command_class.COMMAND_NAME
        if not name:
            raise ValueError(f"COMMAND_NAME が設定されていません: {command_class.__name__}")
        self._registry[name] = command_class
        logger.debug(f"コマンド登録: {name} -> {command_class.__name__}")

    def get(self, name: str) -> Optional[Type[CommandBase]]:
        return self._registry.get(name)

    def get_all_names(self) -> List[str]:
        return list(self._registry.keys())


# グローバルレジストリ
registry = CommandRegistry()


def register_command(command_class: Type[CommandBase]) -> Type[CommandBase]:
    """デコレータ: コマンドクラスをレジストリに登録"""
    registry.register(command_class)
    return command_class


def load_plugins() -> None:
    """サブコマンドプラグインを読み込む（レジストリに登録される）"""
    import actions.rootsys_cmd  # noqa: F401
    import actions.orders_cmd  # noqa: F401
    import actions.dbg_paths_cmd  # noqa: F401
    import actions.wts_cmd  # noqa: F401
    import actions.qbg_cmd  # noqa: F401
    import actions.types_cmd  # noqa: F401
    import actions.intersect_cmd  # noqa: F401
    import actions.adlv_cmd  # noqa: F401
    import actions.verify_cmd  # noqa: F401
    import actions.goldens_cmd  # noqa: F401


class CommandManager:
    """コマンドの実行管理"""

    def __init__(self, config: ConfigManager):
        self.config = config
        self._progress_callback: Optional[Callable] = None

    def set_progress_callback(self, callback: Callable) -> None:
        self._progress_callback = callback

    def _notify(self, message: str, current: int = 0, total: int = 0) -> None:
        if self._progress_callback:
            self._progress_callback(current, total, message)

    def run_command(self, name: str, params: Dict[str, Any]) -> CommandResult:
        """単一のサブコマンドを実行する"""
        command_class = registry.get(name)
        if command_class is None:
            msg = f"未登録のコマンド: {name}"
            logger.error(msg)
            return failure("unknown_command", f"unknown command: {name}", command=name)

        command = command_class(self.config.settings, self.config)

        def on_progress(message: str, percent: float) -> None:
            self._notify(f"{name}: {message}")

        command.set_progress_callback(on_progress)

        issues = command.validate_params(params)
        if issues:
            msg = f"パラメータエラー: {', '.join(issues)}"
            logger.error(f"[{name}] {msg}")
            return failure("bad_params", "invalid parameters", issues=issues)

        logger.info(f"コマンド開始: {name}")
        result = command.execute_safe(params)
        if result.success:
            logger.success(f"コマンド完了: {name} ({result.elapsed_str})")
        else:
            logger.error(f"コマンド失敗: {name} - {result.error}")
        return result

    def run_query(self, query: QueryConfig) -> CommandResult:
        return self.run_command(query.command, dict(query.params))

    def run_goldens(self) -> Dict[str, int]:
        """
        goldens.yaml の全問い合わせを順次実行

        Returns:
            実行結果の辞書 {"success": int, "failed": int, "skipped": int}
        """
        if not self.config._loaded:
            self.config.load()
        queries = self.config._queries
        results = {"success": 0, "failed": 0, "skipped": 0}
        total = len(queries)
        if total == 0:
            logger.warning("ゴールデン問い合わせがありません")
            return results

        start_time = datetime.now()
        for i, query in enumerate(queries, 1):
            if not query.enabled:
                results["skipped"] += 1
                logger.skip(f"スキップ: [{query.id}] {query.name}")
                continue
            self._notify(f"実行中 ({i}/{total}): {query.name}", i, total)
            if self.run_query(query).success:
                results["success"] += 1
            else:
                results["failed"] += 1

        elapsed = (datetime.now() - start_time).total_seconds()
        logger.info(
            f"ゴールデン実行完了: 成功={results['success']}, 失敗={results['failed']}, "
            f"スキップ={results['skipped']} ({int(elapsed // 60)}分{int(elapsed % 60)}秒)"
        )
        return results

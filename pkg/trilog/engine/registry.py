"""Subcommand registry with autodiscovery."""

import importlib
import pkgutil
from typing import Any

from trilog.commands.base import BaseCommand


class CommandRegistry:
    """Discovers and indexes all available subcommands."""

    def __init__(self):
        self.commands: dict[str, type[BaseCommand]] = {}

    def discover(self):
        """Scan trilog.commands.* for BaseCommand subclasses."""
        import trilog.commands as commands_pkg

        for _importer, modname, _ispkg in pkgutil.iter_modules(commands_pkg.__path__):
            if modname == "base":
                continue
            mod = importlib.import_module(f"{commands_pkg.__name__}.{modname}")
            for attr_name in dir(mod):
                attr = getattr(mod, attr_name)
                if (isinstance(attr, type)
                        and issubclass(attr, BaseCommand)
                        and attr is not BaseCommand
                        and hasattr(attr, "meta")):
                    self.commands[attr.meta.id] = attr

    def get(self, command_id: str) -> type[BaseCommand]:
        """Get a command class by id. Raises KeyError if not found."""
        return self.commands[command_id]

    def list_meta(self) -> list[dict[str, Any]]:
        return [cls.meta.model_dump() for _, cls in sorted(self.commands.items())]

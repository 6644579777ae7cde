"""Deterministic key-value reports with text and JSON renderings."""

from __future__ import annotations

from .stateio import fmt_float


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return fmt_float(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(format_value(v) for v in value) if value else "none"
    return str(value)


class Report:
    """Ordered sections of key-value records; rendering is byte-stable."""

    def __init__(self):
        self._sections: list[tuple[str, list[tuple[str, object]]]] = []

    def add(self, section: str, key: str, value) -> None:
        for name, entries in self._sections:
            if name == section:
                entries.append((key, value))
                return
        self._sections.append((section, [(key, value)]))

    def text(self) -> str:
        blocks = []
        for name, entries in self._sections:
            lines = [f"[{name}]"]
            lines.extend(f"{key} = {format_value(value)}" for key, value in entries)
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def json_obj(self) -> dict:
        out: dict[str, dict[str, object]] = {}
        for name, entries in self._sections:
            section = out.setdefault(name, {})
            for key, value in entries:
                if isinstance(value, (list, tuple)):
                    section[key] = format_value(value)
                else:
                    section[key] = value
        return out

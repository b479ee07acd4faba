"""Result storage: JSON reports on disk, plus binary table dumps for debugging."""

import json
import logging
import os
import struct
from pathlib import Path

from trilog.errors import ParameterError
from trilog.field import CyclotomicElement
from trilog.tables import DlogTable

logger = logging.getLogger(__name__)

# ell, e_ell, w, bit_length as little-endian uint32
_DUMP_HEADER = struct.Struct("<4I")


class ResultStore:
    def __init__(self, root: Path | None = None):
        self.root = root or Path(os.environ.get("TRILOG_DATA_DIR", "trilog_data"))

    def _kind_dir(self, kind: str) -> Path:
        d = self.root / kind
        d.mkdir(parents=True, exist_ok=True)
        return d

    def save_report(self, kind: str, name: str, payload: dict) -> Path:
        """Write one result as <root>/<kind>/<name>.json."""
        if not name or "/" in name or name.startswith("."):
            raise ParameterError(f"Invalid report name: {name!r}")
        path = self._kind_dir(kind) / f"{name}.json"
        path.write_text(json.dumps(payload, indent=2))
        logger.info("stored %s report %s", kind, path)
        return path

    def load_report(self, kind: str, name: str) -> dict | None:
        path = self.root / kind / f"{name}.json"
        if not path.exists():
            return None
        return json.loads(path.read_text())

    def list_reports(self, kind: str) -> list[str]:
        kind_dir = self.root / kind
        if not kind_dir.exists():
            return []
        return [p.stem for p in sorted(kind_dir.glob("*.json"))]

    def delete_report(self, kind: str, name: str) -> bool:
        path = self.root / kind / f"{name}.json"
        if not path.exists():
            return False
        path.unlink()
        return True


def dump_table(table: DlogTable, path: Path) -> int:
    """Write the header and row-major entries; returns the byte count."""
    params = table.params
    with open(path, "wb") as f:
        f.write(_DUMP_HEADER.pack(params.ell, params.e_ell, params.w, params.modulus.bit_length))
        for row in table.rows:
            for entry in row:
                f.write(entry.to_bytes())
    size = Path(path).stat().st_size
    logger.info("dumped %d x %d table to %s (%d bytes)", len(table.rows), params.n_cols, path, size)
    return size


def load_table_dump(path: Path, p: int) -> tuple[tuple[int, int, int, int], list[list[CyclotomicElement]]]:
    """Read a dump back as ((ell, e_ell, w, bit_length), rows)."""
    data = Path(path).read_bytes()
    if len(data) < _DUMP_HEADER.size:
        raise ParameterError(f"{path}: too short for a table dump")
    ell, e_ell, w, bits = _DUMP_HEADER.unpack_from(data)
    if bits != p.bit_length():
        raise ParameterError(f"{path}: dump is for a {bits}-bit prime, not {p.bit_length()} bits")
    entry_size = 2 * 8 * -(-bits // 64)
    n_rows = e_ell // w
    n_cols = -(-(ell**w - 1) // 2)
    body = data[_DUMP_HEADER.size:]
    if len(body) != n_rows * n_cols * entry_size:
        raise ParameterError(f"{path}: expected {n_rows * n_cols} entries of {entry_size} bytes")
    rows = []
    for i in range(n_rows):
        row = []
        for j in range(n_cols):
            start = (i * n_cols + j) * entry_size
            row.append(CyclotomicElement.from_bytes(p, body[start:start + entry_size]))
        rows.append(row)
    return (ell, e_ell, w, bits), rows

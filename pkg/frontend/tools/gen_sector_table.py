#!/usr/bin/env python3
"""Regenerate src/sectorTable.ts from the engine's packaged word table."""
import hashlib
import json
from pathlib import Path

HERE = Path(__file__).resolve().parent
SOURCE = HERE.parent.parent / "src" / "affectsim" / "data" / "emotion_words.json"
TARGET = HERE.parent / "src" / "sectorTable.ts"


def main():
    data = SOURCE.read_bytes()
    digest = hashlib.sha256(data).hexdigest()
    table = json.loads(data)
    lines = [
        "// Bundled copy of the engine's versioned emotion word table.",
        "// Regenerate with tools/gen_sector_table.py; the digest is compared against",
        "// the engine's copy at handshake so the two cannot silently drift apart.",
        "",
        "export interface SectorWord {",
        "  word: string;",
        "  degrees: number;",
        "}",
        "",
        f'export const SECTOR_TABLE_VERSION = "{table["version"]}";',
        f'export const SECTOR_TABLE_DIGEST = "{digest}";',
        "",
        "export const SECTOR_WORDS: SectorWord[] = [",
    ]
    for item in table["words"]:
        lines.append(f'  {{ word: "{item["word"]}", degrees: {item["degrees"]} }},')
    lines.append("];")
    lines.append("")
    TARGET.write_text("\n".join(lines))
    print(f"wrote {TARGET} (digest {digest[:12]}...)")


if __name__ == "__main__":
    main()

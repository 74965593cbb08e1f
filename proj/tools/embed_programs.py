#!/usr/bin/env python3
"""Regenerate src/sim/embedded_programs.inc from data/programs/."""

import os

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))

PATHS = {
    "kCcitt16Listing": "data/programs/ccitt16.masm",
    "kCcitt16Meta": "data/programs/ccitt16.meta.json",
    "kCrc16Listing": "data/programs/crc16.masm",
    "kCrc16Meta": "data/programs/crc16.meta.json",
}


def main() -> None:
    chunks = ["// Generated from data/programs/ by tools/embed_programs.py; do not edit by hand.\n"]
    for name, rel in PATHS.items():
        with open(os.path.join(ROOT, rel)) as fh:
            text = fh.read()
        chunks.append(f'static const char* const {name} = R"masm({text})masm";\n')
    with open(os.path.join(ROOT, "src/sim/embedded_programs.inc"), "w") as fh:
        fh.write("\n".join(chunks))


if __name__ == "__main__":
    main()

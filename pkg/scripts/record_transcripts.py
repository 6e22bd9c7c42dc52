"""Record the replay transcripts shipped under src/chartnav/data/transcripts/.

Transcripts pin prompt digests; regenerate after any change to prompt
templates, chart fixtures, or the example bank:

    python scripts/record_transcripts.py
"""

from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

from chartnav.bootstrap import default_bank, load_packaged_charts  # noqa: E402
from chartnav.gateway.core import Gateway  # noqa: E402
from chartnav.gateway.providers import ScriptedProvider  # noqa: E402
from chartnav.gateway.transcript import Transcript  # noqa: E402

from scenarios import SCENARIOS  # noqa: E402

OUT = ROOT / "src" / "chartnav" / "data" / "transcripts"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    charts = load_packaged_charts()
    bank = default_bank()
    for name, scenario in SCENARIOS.items():
        path = OUT / f"{name}.jsonl"
        path.write_text("", encoding="utf-8")
        provider = ScriptedProvider(scenario.rules, scenario.web_rules)
        gateway = Gateway(mode="record", provider=provider, transcript=Transcript(str(path)))
        scenario.run(gateway, charts, bank)
        entries = len(Transcript.load(str(path)))
        print(f"{name}: {entries} entries")


if __name__ == "__main__":
    main()

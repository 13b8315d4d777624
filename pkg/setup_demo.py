"""
Demo Setup - SLOCC determinant toolkit
Writes canonical state files so the CLI can be tried right away
"""

import sys
from pathlib import Path
from typing import Dict, Optional, Union

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).parent))

import config
from qstate import canonical_state
from state_io import write_state

# file stem -> (kind, n, k)
DEMO_STATES = {
    'bell2': ('ghz', 2, None),
    'ghz4': ('ghz', 4, None),
    'ghz6': ('ghz', 6, None),
    'w6': ('w', 6, None),
    'dicke6_2': ('dicke', 6, 2),
    'dicke6_3': ('dicke', 6, 3),
    'dicke6_4': ('dicke', 6, 4),
    'dicke6_5': ('dicke', 6, 5),
    'chi6': ('chi6', 6, None),
}


def create_demo_states(target_dir: Optional[Union[str, Path]] = None) -> Dict[str, Path]:
    """Write every demo state in exact form; returns stem -> path"""
    target = Path(target_dir) if target_dir else config.STATE_DIR
    written = {}
    for stem, (kind, n, k) in DEMO_STATES.items():
        state = canonical_state(kind, n, config.EXACT_MODE, k)
        written[stem] = write_state(state, target / f"{stem}{config.STATE_FILE_SUFFIX}")
    return written


def main():
    target = Path(sys.argv[1]) if len(sys.argv) > 1 else config.STATE_DIR

    print("🧮 SLOCC Determinant Invariants - Demo Setup")
    print("=" * 60)
    print(f"\n📁 Writing demo states to {target} ...")

    written = create_demo_states(target)
    for stem, path in written.items():
        print(f"✅ {stem:<10} {path}")

    print("\n" + "=" * 60)
    print("🎉 Demo states ready!")
    print("\nTry:")
    print(f"  python cli.py invariants {written['chi6']}")
    print(f"  python cli.py equivalence-check {written['chi6']} {written['ghz6']}")
    print("  python cli.py completeness --n 6")


if __name__ == '__main__':
    main()

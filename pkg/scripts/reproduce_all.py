"""Run every reproduction target and print a pass/fail table with timings."""

import sys
import time

from qrdesigns.reproduce import TARGETS, run_target


def main() -> int:
    failed = []
    for name in TARGETS:
        start = time.perf_counter()
        checks = run_target(name)
        elapsed = time.perf_counter() - start
        ok = all(c.ok for c in checks)
        print(f"{name:8s} {'PASS' if ok else 'FAIL'}  {elapsed:6.1f}s")
        for c in checks:
            print("    " + c.line())
        if not ok:
            failed.append(name)
    print("failed:", failed or "none")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())

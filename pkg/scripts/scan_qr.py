"""Sweep extended QR codes and write the rows to JSON.

    python3 scripts/scan_qr.py --q 2,3,4 --max-len 24 --out scan.json
"""

import argparse
import json

from qrdesigns.scan import scan


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", default="3,4")
    ap.add_argument("--max-len", type=int, default=20)
    ap.add_argument("--tmax", type=int, default=4)
    ap.add_argument("--out")
    args = ap.parse_args()

    def show(row):
        flag = "  <-- s > delta" if any(row.exceeds(m) for m in row.delta_s) else ""
        print(f"q={row.q:<2d} p={row.p:<3d} n={row.n:<3d} delta/s multiset={row.delta_s['multiset']} "
              f"distinct={row.delta_s['distinct']} am={row.am_max_t}{flag}", flush=True)

    rows = scan([int(x) for x in args.q.split(",")], args.max_len, args.tmax, progress=show)
    for r in rows:
        if r.notes:
            print(f"q={r.q} p={r.p}: {'; '.join(r.notes)}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_dict() for r in rows], fh, indent=1)


if __name__ == "__main__":
    main()

"""Re-print the transcribed coefficient tables in published layout, for a manual diff."""

from qrdesigns import reference as ref
from qrdesigns.harmonic import render_enumerator

for key in ("ternary14_t3", "quaternary18_t3", "quaternary18_t4"):
    entry = ref.tables()[key]
    print(f"== {key}  (q={entry['q']}, n={entry['n']}, t={entry['t']})")
    for i, (rep, J) in enumerate(zip(ref.jacobi_representatives(key), ref.jacobi_items(key)), 1):
        print(f"({i}) T = {{{', '.join(map(str, rep))}}}")
        print("    " + J.render())
        print(f"    J(1,1,1,1) = {J.total()}")
    print()

for key in ("ternary14_harmonic3", "quaternary18_harmonic3"):
    entry = ref.tables()[key]
    print(f"== {key}  (invariant dimension {entry['invariant_dimension']})")
    print("    " + render_enumerator(entry["n"], ref.harmonic_enumerator(key)))

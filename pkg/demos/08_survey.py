"""
Survey of short words
=====================

Every word with X at both ends is either decomposable, carries mod-p
evidence or a certificate, or is left unresolved.  Unresolved rows are
those with an exceptional prime above the cutoff (13 by default).
"""
import sys
from collections import Counter

from udwords.survey import UNRESOLVED, survey

max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 8
rows = list(survey(max_len))
print(Counter(r.verdict for r in rows))
for r in rows:
    if r.verdict == UNRESOLVED:
        print(f"  {r.word:14} exceptional {r.exceptional_primes}")

# their exceptional primes are genuine but small; a cutoff of 100 accepts them
rows = list(survey(max_len, cutoff=100))
print("cutoff 100:", Counter(r.verdict for r in rows))

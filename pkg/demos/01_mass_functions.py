"""
Evidence about community membership as mass functions
=====================================================

A node's membership is not a single label but a mass assignment over the
candidate communities plus one extra focal set, the whole frame, which
absorbs whatever the evidence cannot pin down. This walk-through builds
a few of these assignments by hand and combines them.
"""

from elprop.belief import (
    betp,
    combine_oracle,
    combine_simple,
    general_from_restricted,
    pl,
    restricted_from_general,
    simple_mass,
    vacuous,
)

frame = ("red", "blue", "green")

# One neighbor half-sure the node is red: mass 0.5 on {red}, the rest on
# the frame (that part is ignorance, not "0.5 on everything else").
m1 = simple_mass("red", 0.5, frame)
print("single source:", dict(zip(frame, m1.singletons)), "ignorance", m1.ignorance)

# A second, equally confident red source reinforces rather than averages.
m_both = combine_simple([m1, simple_mass("red", 0.5, frame)])
print("two agreeing halves -> red mass", m_both.mass("red"))   # 0.75

# Disagreement redistributes: red vs blue at 0.5 each leaves a third
# everywhere, conflict eaten by the normalization.
m_conflict = combine_simple([m1, simple_mass("blue", 0.5, frame)])
print("red vs blue:", [round(m_conflict.mass(k), 4) for k in frame],
      "ignorance", round(m_conflict.ignorance, 4))

# Majorities win but the minority keeps a voice.
m_majority = combine_simple([simple_mass("red", 0.5, frame),
                             simple_mass("red", 0.5, frame),
                             simple_mass("blue", 0.5, frame)])
print("red, red, blue ->", [round(m_majority.mass(k), 4) for k in frame])

# Vacuous evidence is the neutral element.
same = combine_simple([m1, vacuous(frame)])
print("combining with ignorance changes nothing:", same == m1)

# The closed form above is a shortcut for the general combination rule,
# which intersects every pair of focal sets explicitly. Both agree.
slow = restricted_from_general(combine_oracle(
    [general_from_restricted(simple_mass("red", 0.5, frame)),
     general_from_restricted(simple_mass("blue", 0.5, frame)),
     general_from_restricted(simple_mass("red", 0.3, frame))]))
fast = combine_simple([simple_mass("red", 0.5, frame),
                       simple_mass("blue", 0.5, frame),
                       simple_mass("red", 0.3, frame)])
print("closed form vs enumeration:",
      max(abs(a - b) for a, b in zip(fast.singletons, slow.singletons)))

# Plausibility reads the upper envelope; the pignistic transform splits
# the ignorance evenly when a single probability vector is needed.
print("pl(red) =", round(pl(fast, "red"), 4),
      " betp =", [round(p, 4) for p in betp(fast)],
      " sum", round(sum(betp(fast)), 12))

"""
Flips, and what smooth tracking costs
=====================================

When points move, the optimal orientation can jump discontinuously: a
"flip".  A tracker that must move continuously has to sweep through the
intermediate orientations, and at the flip instant those intermediates are
more expensive than the optimum.  This script runs the continuous tracker
on three adversarial scenarios and reports the worst cost ratio each one
forces:

* the box flip scenario forces ratio 5/4,
* the strip flip scenario forces ratio sqrt(2),
* the principal-axis flip is free (ratio 1): at an axis flip the frame is
  isotropic and every orientation costs the same.
"""

import math

from kinostable import DescriptorKind, max_ratio, track_topological
from kinostable.scenarios import obb_lower_bound, pc_flip, strip_lower_bound

for title, traj, kind, forced in (
    ("box flip     ", obb_lower_bound(), DescriptorKind.OBB, 1.25),
    ("strip flip   ", strip_lower_bound(), DescriptorKind.STRIP, math.sqrt(2.0)),
    ("axis flip    ", pc_flip(), DescriptorKind.PC, 1.0),
):
    out = track_topological(traj, kind, dt=1e-3)
    measured = max_ratio(out)
    print(f"{title} worst ratio {measured:.9f}   (forced value {forced:.9f})")
    for flip in out.flips:
        print(
            f"    flip at t={flip.time:.6f}: swept {flip.arc_length:.3f} rad "
            f"{'ccw' if flip.direction > 0 else 'cw'}, worst intermediate cost "
            f"{flip.worst_cost:.6f} vs optimal {flip.opt_cost:.6f}"
        )
    print()

# The box flip deserves a closer look.  Four static points admit two
# minimum boxes of area 2, one axis-aligned and one at 2*arctan(1/2).  The
# fifth point leaves the first box at t = 0.625, and the tracker sweeps
# between the two boxes in whichever rotation direction is cheaper; both
# directions pass a box of area 2.5, hence the 5/4.
out = track_topological(obb_lower_bound(), DescriptorKind.OBB, dt=1e-3)
flip = out.flips[0]
print(
    "box flip detail: from", f"{flip.start:.4f}", "to", f"{flip.end:.4f}",
    "rad (box orientations, mod pi/2); worst ratio", f"{flip.worst_ratio:.6f}",
)

# Render a few words, then damage one character in each with the weak and heavy
# stroke occlusion used for the robustness split. Prints the images as text.
import numpy as np

from visionlan.dataio import OcclusionSpec, RenderConfig, occlude_ost, render_word


def show(image, boxes=None):
    # distance from the background level, so ink shows whatever the polarity
    ink = np.abs(image - np.median(image))
    ink = ink / max(ink.max(), 1e-6)
    rows = []
    for y in range(0, image.shape[0], 2):
        rows.append("".join(" .:-=+*#%@"[int(v * 9.99)] for v in ink[y]))
    print("\n".join(rows))
    if boxes:
        ruler = [" "] * image.shape[1]
        for k, (x0, _, x1, _) in enumerate(boxes):
            ruler[x0] = "|"
            ruler[min(x1, image.shape[1]) - 1] = str(k + 1)[-1]
        print("".join(ruler))


cfg = RenderConfig()
sample = render_word("house", cfg, seed=7)
print("clean render of", repr(sample.text), "with character boxes")
show(sample.image, sample.boxes)

# same render, character 4 ("s") struck once and then twice
for degree in ("weak", "heavy"):
    occ = occlude_ost(sample, OcclusionSpec(degree, target_char=4, seed=3))
    changed = np.argwhere(occ.image != sample.image)
    print(f"\n{degree}: {len(changed)} pixels changed, columns {changed[:, 1].min()}..{changed[:, 1].max()}")
    show(occ.image)

# the clean config drops noise, jitter and curvature: handy for eyeballing the font
print("\nclean config")
show(render_word("zebra42", RenderConfig.clean(), seed=0).image)

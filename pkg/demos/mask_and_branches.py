# Walk one image through the training-time graph by hand: features, the
# character mask for every index, the two complementary branches and the
# occluded features that the recognizer sees.
import torch

from visionlan.dataio import RenderConfig, make_mlm_labels, render_word, VOCAB
from visionlan.mlm import wcl_split
from visionlan.model import ModelConfig, VisionLAN
from visionlan.vrm import decode_logits, occlude_features

torch.manual_seed(0)
model = VisionLAN(ModelConfig()).eval()
sample = render_word("burns", RenderConfig(), seed=1)
images = torch.from_numpy(sample.image[None])

with torch.no_grad():
    V = model.backbone(images)
print("features", tuple(V.shape))

for P in range(1, len(sample.text) + 1):
    (mas, _), (rem, _) = make_mlm_labels(sample.text, P, VOCAB, model.cfg.N)
    with torch.no_grad():
        mask, logits_mas, logits_rem = model.mlm(V, P)
    col = mask[0].sum(0)
    print(f"P={P} target {VOCAB.decode(mas)!r} / {VOCAB.decode(rem)!r}"
          f"  mask column energy peaks at column {int(col.argmax())}"
          f"  branch outputs {decode_logits(logits_mas)[0]!r} / {decode_logits(logits_rem)[0]!r}")

# the split is exact: the two halves always add back up to V
v_mas, v_rem = wcl_split(V, mask)
print("max |V_mas + V_rem - V| =", float((v_mas + v_rem - V).abs().max()))

# at training time flagged samples go to the recognizer with the mask cut out
V_m = occlude_features(V, mask)
with torch.no_grad():
    _, logits = model.vrm(V_m)
print("untrained recognizer on occluded features:", decode_logits(logits))

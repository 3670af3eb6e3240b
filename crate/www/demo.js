import init, { classify_point, apply_map, render_slice } from "./pkg/pentablock_wasm.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");
const sliders = ["sre", "sim", "pre", "pim", "band"];

function tol() {
  return Math.pow(10, Number($("band").value));
}

function refreshLabels() {
  for (const id of sliders) $(`${id}-val`).textContent = $(id).value;
  const mode = $("mode").value;
  $("pre").disabled = $("pim").disabled = mode !== "fiber";
  $("sre").disabled = $("sim").disabled = mode === "base";
}

function render() {
  const size = canvas.width;
  const pixels = render_slice(
    $("mode").value,
    Number($("sre").value),
    Number($("sim").value),
    Number($("pre").value),
    Number($("pim").value),
    size,
    tol(),
  );
  if (pixels.length === 0) return;
  ctx.putImageData(new ImageData(new Uint8ClampedArray(pixels), size, size), 0, 0);
}

function pretty(raw) {
  try {
    return JSON.stringify(JSON.parse(raw), null, 1);
  } catch {
    return raw;
  }
}

async function main() {
  await init();
  $("status").textContent = "";

  refreshLabels();
  render();

  $("mode").addEventListener("change", () => { refreshLabels(); render(); });
  for (const id of sliders) {
    $(id).addEventListener("input", refreshLabels);
    $(id).addEventListener("change", render);
  }

  $("classify-go").addEventListener("click", () => {
    $("classify-out").textContent = pretty(classify_point($("classify-in").value, tol()));
  });
  $("apply-go").addEventListener("click", () => {
    $("apply-out").textContent = pretty(apply_map($("map-in").value, $("apply-in").value, tol()));
  });
}

main().catch((e) => { $("status").textContent = `Failed to load the module: ${e}`; });

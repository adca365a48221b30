import init, { dot_spectrum, band_structure, chain_transmission } from "./pkg/mottgate_web.js";

const POINTS = 600;
const BLUE = "#1f5fbf";
const RED = "#c0392b";

const $ = (id) => document.getElementById(id);
const num = (id) => parseFloat($(id).value);

function setup(canvas) {
  const ratio = window.devicePixelRatio || 1;
  canvas.width = canvas.clientWidth * ratio;
  canvas.height = canvas.clientHeight * ratio;
  const ctx = canvas.getContext("2d");
  ctx.scale(ratio, ratio);
  ctx.clearRect(0, 0, canvas.clientWidth, canvas.clientHeight);
  ctx.font = "11px system-ui";
  return { ctx, w: canvas.clientWidth, h: canvas.clientHeight };
}

function axes({ ctx, w, h }, lo, hi) {
  ctx.strokeStyle = "#999";
  ctx.fillStyle = "#555";
  ctx.beginPath();
  ctx.moveTo(40, h - 20);
  ctx.lineTo(w - 10, h - 20);
  ctx.stroke();
  for (let i = 0; i <= 5; i++) {
    const x = 40 + ((w - 50) * i) / 5;
    ctx.fillText((lo + ((hi - lo) * i) / 5).toFixed(2), x - 10, h - 6);
  }
}

function curve(plot, xs, ys, lo, hi, color) {
  const { ctx, w, h } = plot;
  const sx = (x) => 40 + ((x - lo) / (hi - lo)) * (w - 50);
  const sy = (y) => h - 20 - y * (h - 35);
  ctx.strokeStyle = color;
  ctx.beginPath();
  let pen = false;
  xs.forEach((x, i) => {
    const y = ys[i];
    if (y === null) {
      pen = false;
      return;
    }
    pen ? ctx.lineTo(sx(x), sy(y)) : ctx.moveTo(sx(x), sy(y));
    pen = true;
  });
  ctx.stroke();
}

function drawDot(p) {
  const s = JSON.parse(dot_spectrum(p.alpha_g, p.alpha_e, p.residue, p.g01sq, p.lo, p.hi, POINTS));
  const plot = setup($("dot"));
  axes(plot, p.lo, p.hi);
  curve(plot, s.lambda, s.ground, p.lo, p.hi, BLUE);
  curve(plot, s.lambda, s.excited, p.lo, p.hi, RED);
}

function drawBands(p) {
  const fermi = num("fermi");
  const b = JSON.parse(band_structure(p.alpha_g, p.alpha_e, p.residue, p.modulus, p.phase, p.lo, p.hi, fermi));
  const plot = setup($("bands"));
  const { ctx, w, h } = plot;
  axes(plot, p.lo, p.hi);
  const sx = (x) => 40 + ((x - p.lo) / (p.hi - p.lo)) * (w - 50);
  const row = (bands, y, color, label) => {
    ctx.fillStyle = "#555";
    ctx.fillText(label, 2, y + 12);
    ctx.fillStyle = color;
    for (const band of bands) ctx.fillRect(sx(band.lo), y, Math.max(1, sx(band.hi) - sx(band.lo)), 18);
  };
  row(b.ground, 20, BLUE, "L");
  row(b.excited, 55, RED, "2L");
  ctx.strokeStyle = "#000";
  ctx.setLineDash([4, 3]);
  ctx.beginPath();
  ctx.moveTo(sx(fermi), 10);
  ctx.lineTo(sx(fermi), h - 20);
  ctx.stroke();
  ctx.setLineDash([]);
  const g = b.fermi_gap;
  $("gap").textContent =
    g.kind === "gap"
      ? `excited gap ${fmt(g.lo)} … ${fmt(g.hi)}, width ${fmt(g.width)}` +
        (b.mott_transition ? " (metal → insulator on excitation)" : "")
      : "Fermi level inside an excited band";
}

const fmt = (x) => (x === null ? "∞" : x.toFixed(4));

function drawChain(p) {
  const cells = Math.max(1, Math.min(200, Math.round(num("cells"))));
  const c = JSON.parse(
    chain_transmission(p.alpha_g, p.alpha_e, p.residue, p.modulus, p.phase, cells, $("excited").checked, p.lo, p.hi, POINTS),
  );
  const plot = setup($("chain"));
  axes(plot, p.lo, p.hi);
  curve(plot, c.lambda, c.transmission, p.lo, p.hi, $("excited").checked ? RED : BLUE);
}

function redraw() {
  const p = Object.fromEntries(
    ["alpha_g", "alpha_e", "residue", "g01sq", "modulus", "phase", "lo", "hi"].map((k) => [k, num(k)]),
  );
  $("error").textContent = "";
  for (const draw of [drawDot, drawBands, drawChain]) {
    try {
      draw(p);
    } catch (e) {
      $("error").textContent += `${e}\n`;
    }
  }
}

await init();
document.querySelectorAll("input").forEach((el) => el.addEventListener("input", redraw));
window.addEventListener("resize", redraw);
redraw();

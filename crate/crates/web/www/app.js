import init, { analyze, verify, alpha_beta } from "./pkg/vat_web.js";

const $ = (id) => document.getElementById(id);
const canvas = $("view");
const ctx = canvas.getContext("2d");
let current = null;

function input() {
  const text = $("edges").value.trim();
  return text.length > 0 ? text : $("spec").value.trim();
}

function frac(f) {
  if (!f) return "n/a";
  return f.den === 1 ? `${f.num}` : `${f.num}/${f.den} ≈ ${f.real.toPrecision(6)}`;
}

function draw(g, red = [], green = [], blue = []) {
  const w = canvas.width, h = canvas.height, r = Math.min(w, h) / 2 - 24;
  const pos = g.layout.map(([x, y]) => [w / 2 + r * x, h / 2 + r * y]);
  const inBlue = new Set(blue);
  ctx.clearRect(0, 0, w, h);
  for (const [u, v] of g.edges) {
    const crossing = inBlue.has(u) !== inBlue.has(v);
    ctx.strokeStyle = blue.length && crossing ? "#36c" : "#999";
    ctx.lineWidth = blue.length && crossing ? 2 : 1;
    ctx.beginPath();
    ctx.moveTo(...pos[u]);
    ctx.lineTo(...pos[v]);
    ctx.stroke();
  }
  const color = (i) => red.includes(i) ? "#d33" : green.includes(i) ? "#3a3" : inBlue.has(i) ? "#36c" : "#ddd";
  const radius = g.n > 40 ? 3 : 8;
  pos.forEach(([x, y], i) => {
    ctx.fillStyle = color(i);
    ctx.beginPath();
    ctx.arc(x, y, radius, 0, 2 * Math.PI);
    ctx.fill();
    ctx.stroke();
    if (g.n <= 40) {
      ctx.fillStyle = "#000";
      ctx.fillText(i, x + 9, y - 9);
    }
  });
}

function show(fn) {
  try {
    fn();
  } catch (e) {
    $("summary").innerHTML = `<p class="fail">${e}</p>`;
  }
}

function doAnalyze() {
  show(() => {
    const g = JSON.parse(analyze(input()));
    current = g;
    const tau = g.vat ? frac(g.vat.value) : "skipped";
    const phi = g.conductance ? frac(g.conductance.value) + (g.conductance.exact ? "" : " (sweep)") : "n/a";
    $("summary").innerHTML =
      `<p><b>${g.graph_id}</b>: n = ${g.n}, m = ${g.m}, ${g.d === null ? "irregular" : "d = " + g.d}<br>` +
      `τ = ${tau}<br>Φ = ${phi}<br>` +
      `λ₂ = ${g.lambda2 === null ? "n/a" : g.lambda2.toFixed(9)}, gap = ${g.gap === null ? "n/a" : g.gap.toFixed(9)}` +
      (g.note ? `<br><i>${g.note}</i>` : "") + "</p>";
    draw(g, g.vat ? g.vat.witness : [], g.vat ? g.vat.largest : [], []);
    $("raw").textContent = JSON.stringify(g, null, 1);
    $("checks").innerHTML = "";
  });
}

function doVerify() {
  show(() => {
    const r = JSON.parse(verify(input()));
    const rows = r.reports.map((t) =>
      `<tr class="${t.holds ? "" : "fail"}"><td>${t.theorem}</td><td>${t.lhs.real}</td>` +
      `<td>${t.rhs.real}</td><td>${t.holds}</td><td>${t.strict_holds}</td></tr>`).join("");
    const skips = r.skipped.map((s) => `<tr><td>${s.check}</td><td colspan="4">skipped: ${s.reason}</td></tr>`).join("");
    $("checks").innerHTML =
      `<table><tr><th>check</th><th>lhs</th><th>rhs</th><th>holds</th><th>strict</th></tr>${rows}${skips}</table>`;
  });
}

function doAlphaBeta() {
  show(() => {
    if (!current) doAnalyze();
    const a = parseFloat($("alpha").value), b = parseFloat($("beta").value);
    const r = JSON.parse(alpha_beta(input(), a, b));
    const value = r.exact ? frac(r.exact) : r.value.toPrecision(8);
    $("summary").innerHTML += `<p>(${a},${b})-VAT = ${value}, S = {${r.witness.join(", ")}}</p>`;
    if (current) draw(current, r.witness, r.largest, []);
  });
}

canvas.addEventListener("click", () => {
  if (current && current.conductance) draw(current, [], [], current.conductance.witness);
});

await init();
$("analyze").onclick = doAnalyze;
$("verify").onclick = doVerify;
$("ab").onclick = doAlphaBeta;
doAnalyze();

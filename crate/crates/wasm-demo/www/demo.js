// Glue for the demo page. Expects the wasm-bindgen output in ./pkg, built
// with: wasm-bindgen --target web (see the repository README).
import init, { analyze, radius_scan, monochromatic_solution } from "./pkg/rado_wasm_demo.js";

const palette = ["#e4572e", "#29335c", "#f3a712", "#4c9f70"];
const $ = (id) => document.getElementById(id);

function cell(color, value, hit) {
  const div = document.createElement("div");
  div.className = "cell" + (hit ? " hit" : "");
  div.style.background = palette[(color - 1) % palette.length];
  div.title = `${value} → color ${color}`;
  if (value <= 99) div.textContent = value;
  return div;
}

function strip(colors, label, hits = new Set()) {
  const row = document.createElement("div");
  row.className = "strip";
  const lbl = document.createElement("span");
  lbl.className = "lbl";
  lbl.textContent = label;
  row.appendChild(lbl);
  colors.forEach((c, i) => row.appendChild(cell(c, i + 1, hits.has(i + 1))));
  return row;
}

function fail(target, message) {
  target.replaceChildren();
  const p = document.createElement("p");
  p.className = "error";
  p.textContent = message;
  target.appendChild(p);
}

function kvTable(rows) {
  const table = document.createElement("table");
  table.className = "kv";
  for (const [k, v] of rows) {
    const tr = document.createElement("tr");
    const kd = document.createElement("td");
    kd.textContent = k;
    const vd = document.createElement("td");
    if (v instanceof Node) vd.appendChild(v); else vd.textContent = v;
    tr.append(kd, vd);
    table.appendChild(tr);
  }
  return table;
}

function runAnalyze() {
  const out = $("analyzeOut");
  const res = JSON.parse(analyze($("coeffs").value));
  if (res.error) return fail(out, res.error);
  const rows = [
    ["canonical form", res.equation.join(", ")],
    ["regular", res.regular
      ? `yes — coefficients at indices {${res.witness_subset.join(",")}} sum to 0`
      : "no — no nonempty subset of coefficients sums to 0"],
    ["forbidden ratios", res.ratios.map((s, i) => `S_${i + 1} = ${s}`).join(",  ")],
  ];
  if (res.linkage.m >= 1) {
    rows.push([`linkage (cap ${res.linkage_cap})`,
      `size ${res.linkage.m}: first row (${res.linkage.first_row.join(", ")}), ` +
      `ratio indices (${res.linkage.ratio_indices.join(", ")}), ` +
      `integrality base ${res.linkage.integrality_base}`]);
    rows.push(["degree of regularity", `≥ ${res.linkage.m} (certified by the linkage matrix)`]);
  } else {
    rows.push([`linkage (cap ${res.linkage_cap})`, "no matrix — no lower bound from this method"]);
  }
  out.replaceChildren(kvTable(rows));
}

function runScan() {
  const out = $("scanOut");
  const res = JSON.parse(radius_scan($("coeffs").value, Number($("scanR").value), Number($("scanCap").value)));
  if (res.error) return fail(out, res.error);
  out.replaceChildren();
  for (const entry of res.lengths) {
    out.appendChild(strip(entry.colors, `N=${entry.n}`));
  }
  const note = document.createElement("p");
  note.className = "radius-note";
  note.textContent = res.radius
    ? `radius = ${res.radius}: every ${res.r}-coloring of [1, ${res.radius}] has a monochromatic solution.`
    : `no radius up to cap ${res.cap}: a solution-free ${res.r}-coloring exists at every tested length.`;
  out.appendChild(note);
}

function runSolve() {
  const out = $("solveOut");
  const res = JSON.parse(monochromatic_solution($("coeffs").value, $("coloringText").value, $("distinct").checked));
  if (res.error) return fail(out, res.error);
  out.replaceChildren();
  const hits = new Set(res.solution ? res.solution.entries : []);
  out.appendChild(strip(res.colors, `N=${res.n}`, hits));
  const note = document.createElement("p");
  note.className = "radius-note";
  if (res.solution) {
    note.textContent = `monochromatic solution (${res.solution.entries.join(", ")}), ` +
      `all color ${res.solution.color}` + (res.distinct ? ", entries distinct" : "");
  } else {
    note.textContent = res.solution_free
      ? "this coloring is solution-free for the equation" +
        (res.distinct ? " (even without the distinctness requirement there may be degenerate solutions — toggle to check)" : "")
      : "no solution meets the constraints inside this interval";
  }
  out.appendChild(note);
}

function generate(kind) {
  const n = 60, parts = [];
  for (let v = 1; v <= n; v++) {
    parts.push(kind === "parity" ? (v % 2 === 1 ? 1 : 2) : (Math.floor((v - 1) / 5) % 2) + 1);
  }
  $("coloringText").value = `${n} 2\n${parts.join(" ")}`;
}

init().then(() => {
  $("analyzeBtn").onclick = runAnalyze;
  $("scanBtn").onclick = runScan;
  $("solveBtn").onclick = runSolve;
  $("genParity").onclick = () => generate("parity");
  $("genBlocks").onclick = () => generate("blocks");
  runAnalyze();
  runScan();
});

import init, { stringy, orbits, census } from "./pkg/detstringy_web.js";

const $ = (id) => document.getElementById(id);

function poly(terms) {
  if (terms.length === 0) return "0";
  return terms
    .map(({ exponent: e, coefficient: c }, i) => {
      const neg = c.startsWith("-");
      const mag = neg ? c.slice(1) : c;
      const mono = e === 0 ? "" : e === 1 ? "q" : `q^${e}`;
      const body = mono === "" ? mag : mag === "1" ? mono : mag + mono;
      if (i === 0) return (neg ? "-" : "") + body;
      return (neg ? " - " : " + ") + body;
    })
    .join("");
}

function show(el, fn) {
  el.classList.remove("err");
  try {
    el.innerHTML = fn();
  } catch (e) {
    el.classList.add("err");
    el.textContent = String(e);
  }
}

function values(form) {
  return Object.fromEntries(new FormData(form).entries());
}

function runStringy(ev) {
  ev?.preventDefault();
  const v = values($("stringy-form"));
  show($("stringy-out"), () => {
    const rec = JSON.parse(stringy(+v.r, +v.k, v.variety));
    const hodge = rec.hodgeDiagonal.map((h) => `h<sup>${h.p},${h.p}</sup> = ${h.value}`).join(", ");
    const checks = rec.checks.map((c) => `${c.passed ? "ok  " : "FAIL"} ${c.name}`).join("\n");
    return [
      `E_st = ${poly(rec.stringyE)}`,
      `dimension ${rec.dimension}, euler number ${rec.eulerNumber}`,
      hodge,
      checks,
    ].join("\n");
  });
}

function runOrbits() {
  const form = $("orbit-form");
  const v = values(form);
  form.elements.capOut.value = v.cap;
  show($("orbit-out"), () => {
    const o = JSON.parse(orbits(+v.r, +v.k, +v.cap, v.variety));
    const part = new Map(o.partial.map((t) => [t.exponent, t.coefficient]));
    const lim = new Map(o.limit.map((t) => [t.exponent, t.coefficient]));
    const exps = [...new Set([...part.keys(), ...lim.keys()])].sort((a, b) => b - a);
    const rows = exps
      .filter((e) => e >= -12)
      .map((e) => {
        const cls = o.mismatched.includes(e) ? "miss" : o.flagged.includes(e) ? "flag" : "match";
        return `<tr class="${cls}"><td>${e}</td><td>${part.get(e) ?? "0"}</td><td>${lim.get(e) ?? "0"}</td></tr>`;
      })
      .join("");
    const bound = o.bound === null ? "none, the sum is exact" : o.bound;
    return `tail bound: ${bound}; non-negative exponents settled: ${o.settled ? "yes" : "no"}
<table><tr><th>exponent</th><th>partial</th><th>limit</th></tr>${rows}</table>`;
  });
}

function runCensus(ev) {
  ev?.preventDefault();
  const v = values($("census-form"));
  show($("census-out"), () => {
    const c = JSON.parse(census(+v.p, +v.r, +v.s));
    const rows = c.rows
      .map((r) => `<tr><td>${r.rank}</td><td>${r.counted}</td><td>${r.predicted}</td></tr>`)
      .join("");
    return `${c.candidates} matrices over F_${c.p}
<table><tr><th>rank</th><th>counted</th><th>class at q = p</th></tr>${rows}</table>`;
  });
}

await init();
$("stringy-form").addEventListener("submit", runStringy);
$("orbit-form").addEventListener("input", runOrbits);
$("census-form").addEventListener("submit", runCensus);
runStringy();
runOrbits();
runCensus();

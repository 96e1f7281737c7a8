/** DOM rendering for the check page. No similarity math happens here: every
 * number shown comes straight out of an API response field. */

import { CheckResponse, DatasetInfo, Match } from "./api.js";

export function provenanceLabel(p: Match["provenance"]): string {
  if (!p.file_path) return p.project || "(unknown)";
  return `${p.project}/${p.file_path}:${p.start_line}–${p.end_line}`;
}

export function renderDatasetOptions(select: HTMLSelectElement, datasets: DatasetInfo[]): void {
  select.innerHTML = "";
  for (const ds of datasets) {
    const opt = document.createElement("option");
    opt.value = ds.name;
    opt.textContent = `${ds.name} (${ds.doc_count} docs, ${ds.part_count} parts)`;
    select.appendChild(opt);
  }
}

/** The threshold selector only ever carries the API-advertised grid. */
export function renderThresholdOptions(select: HTMLSelectElement, thresholds: number[]): void {
  select.innerHTML = "";
  for (const t of thresholds) {
    const opt = document.createElement("option");
    opt.value = String(t);
    opt.textContent = String(t);
    select.appendChild(opt);
  }
}

export function renderError(banner: HTMLElement, message: string | null): void {
  if (message === null) {
    banner.hidden = true;
    banner.textContent = "";
  } else {
    banner.hidden = false;
    banner.textContent = message;
  }
}

export function renderResults(container: HTMLElement, response: CheckResponse | null): void {
  container.innerHTML = "";
  if (response === null) return;
  const meta = document.createElement("p");
  meta.className = "result-meta";
  meta.textContent =
    `threshold ${response.threshold}, ${response.parts} part(s), ` +
    `${response.elapsed_ms.toFixed(1)} ms`;
  container.appendChild(meta);

  if (response.matches.length === 0) {
    const none = document.createElement("p");
    none.className = "no-matches";
    none.textContent = "no duplicates at this threshold";
    container.appendChild(none);
    return;
  }

  const table = document.createElement("table");
  table.className = "matches";
  const head = document.createElement("tr");
  for (const title of ["similarity", "document", "provenance", ""]) {
    const th = document.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (const match of response.matches) {
    const row = document.createElement("tr");
    row.className = "match-row";

    const sim = document.createElement("td");
    sim.className = "similarity";
    sim.textContent = match.similarity.toFixed(3);
    row.appendChild(sim);

    const id = document.createElement("td");
    id.textContent = `#${match.id}`;
    row.appendChild(id);

    const prov = document.createElement("td");
    prov.className = "provenance";
    prov.textContent = provenanceLabel(match.provenance);
    row.appendChild(prov);

    const previewCell = document.createElement("td");
    const toggle = document.createElement("button");
    toggle.type = "button";
    toggle.className = "preview-toggle";
    toggle.textContent = "show";
    const pre = document.createElement("pre");
    pre.className = "preview";
    pre.hidden = true;
    pre.textContent = match.preview;
    toggle.addEventListener("click", () => {
      pre.hidden = !pre.hidden;
      toggle.textContent = pre.hidden ? "show" : "hide";
    });
    previewCell.appendChild(toggle);
    previewCell.appendChild(pre);
    row.appendChild(previewCell);

    table.appendChild(row);
  }
  container.appendChild(table);
}

/** Check-page wiring: populate selectors from the API, submit documents,
 * render matches, keep a session log and export removal candidates. */

import { checkDocument, DatasetInfo, getDatasets } from "./api.js";
import { buildRemovalExport, Session } from "./state.js";
import {
  renderDatasetOptions,
  renderError,
  renderResults,
  renderThresholdOptions,
} from "./ui.js";

export interface PageHandles {
  session: Session;
  /** resolves when the initial dataset load settles (ok or error) */
  ready: Promise<void>;
}

export function initCheckPage(root: HTMLElement): PageHandles {
  root.innerHTML = `
    <h1>corpusdedup: check a document</h1>
    <div id="error-banner" class="error" hidden></div>
    <form id="check-form">
      <label>dataset
        <select id="dataset-select" required></select>
      </label>
      <label>threshold
        <select id="threshold-select" required></select>
      </label>
      <label>verification
        <select id="verify-select">
          <option value="signature" selected>signature</option>
          <option value="exact">exact</option>
          <option value="none">none</option>
        </select>
      </label>
      <label>label
        <input id="label-input" type="text" placeholder="doc-1" />
      </label>
      <textarea id="text-input" rows="12"
        placeholder="paste code or text to check against the training set"></textarea>
      <div class="actions">
        <button id="submit-button" type="submit">check</button>
        <button id="export-button" type="button" disabled>export removal ids</button>
      </div>
    </form>
    <div id="results"></div>
  `;

  const banner = root.querySelector<HTMLElement>("#error-banner")!;
  const form = root.querySelector<HTMLFormElement>("#check-form")!;
  const datasetSelect = root.querySelector<HTMLSelectElement>("#dataset-select")!;
  const thresholdSelect = root.querySelector<HTMLSelectElement>("#threshold-select")!;
  const verifySelect = root.querySelector<HTMLSelectElement>("#verify-select")!;
  const labelInput = root.querySelector<HTMLInputElement>("#label-input")!;
  const textInput = root.querySelector<HTMLTextAreaElement>("#text-input")!;
  const exportButton = root.querySelector<HTMLButtonElement>("#export-button")!;
  const results = root.querySelector<HTMLElement>("#results")!;

  const session = new Session();
  let datasets: DatasetInfo[] = [];
  let inflight: AbortController | null = null;
  let haveResults = false;

  function thresholdsFor(name: string): number[] {
    const ds = datasets.find((d) => d.name === name);
    return ds ? ds.thresholds : [];
  }

  async function runCheck(): Promise<void> {
    const text = textInput.value;
    const dataset = datasetSelect.value;
    const threshold = Number(thresholdSelect.value);
    if (!dataset || !thresholdSelect.value) return;
    // one check in flight at a time: a new submission cancels and resubmits
    if (inflight) inflight.abort();
    const controller = new AbortController();
    inflight = controller;
    try {
      const response = await checkDocument(
        { text, dataset, threshold, verify: verifySelect.value },
        controller.signal,
      );
      if (inflight !== controller) return; // superseded
      renderError(banner, null);
      renderResults(results, response);
      haveResults = true;
      const label = labelInput.value.trim() || session.nextLabel();
      labelInput.value = "";
      session.record(label, threshold, response.matches.length);
      exportButton.disabled = session.entries.length === 0;
    } catch (err) {
      if (controller.signal.aborted) return;
      renderError(banner, `check failed: ${(err as Error).message}`);
    } finally {
      if (inflight === controller) inflight = null;
    }
  }

  form.addEventListener("submit", (event) => {
    event.preventDefault();
    void runCheck();
  });

  datasetSelect.addEventListener("change", () => {
    renderThresholdOptions(thresholdSelect, thresholdsFor(datasetSelect.value));
    renderResults(results, null);
    haveResults = false;
  });

  // changing the threshold re-queries with the pasted text intact
  thresholdSelect.addEventListener("change", () => {
    if (haveResults) void runCheck();
  });

  exportButton.addEventListener("click", () => {
    const content = buildRemovalExport(session, Number(thresholdSelect.value));
    const blob = new Blob([content], { type: "text/plain" });
    const anchor = document.createElement("a");
    anchor.href = URL.createObjectURL(blob);
    anchor.download = "removal-ids.txt";
    anchor.click();
    URL.revokeObjectURL(anchor.href);
  });

  const ready = (async () => {
    try {
      datasets = await getDatasets();
      renderDatasetOptions(datasetSelect, datasets);
      if (datasets.length > 0) {
        renderThresholdOptions(thresholdSelect, datasets[0].thresholds);
      }
      renderError(banner, null);
    } catch (err) {
      renderError(banner, `cannot reach the check service: ${(err as Error).message}`);
    }
  })();

  return { session, ready };
}

declare global {
  interface Window {
    __corpusdedupTest?: boolean;
  }
}

if (typeof window !== "undefined" && !window.__corpusdedupTest) {
  const root = document.querySelector<HTMLElement>("#app");
  if (root) initCheckPage(root);
}

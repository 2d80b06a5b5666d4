/** DOM rendering for the explorer; all state lives in the controller. */

import { hasPoint, maskHex, popcount } from "./bits.js";
import { FIXTURE_NAMES } from "./fixtures.js";
import { GridController, OverlayMode } from "./state.js";

const BADGES: Record<string, { label: string; css: string }> = {
  NPT_ENTANGLED: { label: "NPT-entangled", css: "npt" },
  PPT_ENTANGLED: { label: "PPT-entangled", css: "ppt" },
  SEPARABLE: { label: "Separable", css: "sep" },
  UNDECIDED: { label: "Undecided", css: "und" },
};

const OVERLAYS: OverlayMode[] = [
  "none", "covering", "violating_point", "quadruple_free", "complement",
];

export function mountExplorer(root: HTMLElement, controller: GridController): () => void {
  root.innerHTML = `
    <div class="banner" id="banner" hidden></div>
    <div class="layout">
      <div>
        <table class="grid" id="grid"></table>
        <div class="hint">rows are labelled 3..0 top to bottom, columns 0..3</div>
      </div>
      <div class="side">
        <div id="badge" class="badge">empty</div>
        <div id="meta" class="meta"></div>
        <div class="controls">
          <label>overlay
            <select id="overlay"></select>
          </label>
          <button id="cycle" title="next covering quadruple">cycle</button>
          <button id="undo">undo</button>
        </div>
        <div class="fixtures" id="fixtures"></div>
        <pre id="certificate" class="certificate"></pre>
      </div>
    </div>`;

  const grid = root.querySelector<HTMLTableElement>("#grid")!;
  for (let beta = 3; beta >= 0; beta--) {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = String(beta);
    tr.appendChild(th);
    for (let alpha = 0; alpha < 4; alpha++) {
      const td = document.createElement("td");
      const button = document.createElement("button");
      button.className = "cell";
      button.dataset.alpha = String(alpha);
      button.dataset.beta = String(beta);
      button.addEventListener("click", () => void controller.toggleCell(alpha, beta));
      td.appendChild(button);
      tr.appendChild(td);
    }
    grid.appendChild(tr);
  }
  const footer = document.createElement("tr");
  footer.innerHTML = "<th></th>" + [0, 1, 2, 3].map((a) => `<th>${a}</th>`).join("");
  grid.appendChild(footer);

  const overlaySelect = root.querySelector<HTMLSelectElement>("#overlay")!;
  for (const mode of OVERLAYS) {
    const option = document.createElement("option");
    option.value = mode;
    option.textContent = mode.replace("_", " ");
    overlaySelect.appendChild(option);
  }
  overlaySelect.addEventListener("change", () =>
    controller.setOverlay(overlaySelect.value as OverlayMode));
  root.querySelector("#cycle")!.addEventListener("click", () =>
    controller.cycleCoveringQuadruple());
  root.querySelector("#undo")!.addEventListener("click", () => void controller.undo());

  const fixturesBox = root.querySelector<HTMLElement>("#fixtures")!;
  for (const name of FIXTURE_NAMES) {
    const button = document.createElement("button");
    button.textContent = name;
    button.addEventListener("click", () => void controller.loadFixture(name));
    fixturesBox.appendChild(button);
  }

  return function render(): void {
    const overlayPoints = new Set(
      controller.overlayPoints().map(([a, b]) => 4 * b + a));
    grid.querySelectorAll<HTMLButtonElement>("button.cell").forEach((button) => {
      const alpha = Number(button.dataset.alpha);
      const beta = Number(button.dataset.beta);
      const inside = hasPoint(controller.mask, alpha, beta);
      button.classList.toggle("on", inside);
      button.classList.toggle("overlay", overlayPoints.has(4 * beta + alpha));
      button.textContent = inside ? "x" : "";
    });

    const badge = root.querySelector<HTMLElement>("#badge")!;
    const verdict = controller.classification?.verdict;
    if (controller.mask === 0) {
      badge.textContent = "empty";
      badge.className = "badge";
    } else if (verdict) {
      const style = BADGES[verdict];
      badge.textContent = style.label + (controller.pending > 0 ? " …" : "");
      badge.className = `badge ${style.css}`;
    } else {
      badge.textContent = controller.pending > 0 ? "classifying …" : "unknown";
      badge.className = "badge";
    }

    root.querySelector<HTMLElement>("#meta")!.textContent =
      `${maskHex(controller.mask)} · ${popcount(controller.mask)} points · ` +
      `undo depth ${controller.undoDepth()}`;

    const banner = root.querySelector<HTMLElement>("#banner")!;
    const problem = controller.stale
      ? `showing stale results: ${controller.lastError ?? "network failure"}`
      : controller.lastError;
    banner.hidden = !problem;
    banner.textContent = problem ?? "";

    const certificate = root.querySelector<HTMLElement>("#certificate")!;
    certificate.textContent = controller.classification
      ? JSON.stringify(controller.classification.certificate, null, 2)
      : "";
  };
}

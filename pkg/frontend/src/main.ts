// DOM wiring: two panels (collection explorer, quiver explorer) over the
// stores.  This file is the only one that touches the document.

import { ApiClient } from "./api.js";
import { renderCollectionSvg, renderQuiverSvg } from "./render.js";
import { CollectionStore } from "./state.js";
import { QuiverKind, QuiverStore } from "./quiver_state.js";
import { Subset } from "./types.js";

const api = new ApiClient("");
const collection = new CollectionStore(api);
const quiver = new QuiverStore(api);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function params(): { n: number; k: number; l: number } {
  return {
    n: Number(el<HTMLInputElement>("param-n").value),
    k: Number(el<HTMLInputElement>("param-k").value),
    l: Number(el<HTMLInputElement>("param-l").value),
  };
}

function parseMember(key: string): Subset {
  return key.split(",").map(Number);
}

function renderCollectionPanel(): void {
  const view = el<HTMLDivElement>("collection-view");
  const snapshot = collection.current;
  if (!snapshot) {
    view.innerHTML = "<p>load a collection to begin</p>";
    return;
  }
  view.innerHTML = renderCollectionSvg(
    snapshot.doc,
    collection.selected,
    collection.error?.pair ?? null,
  );
  for (const node of view.querySelectorAll<SVGGElement>("g.member")) {
    node.addEventListener("click", () => {
      void collection.select(parseMember(node.dataset.member!));
    });
  }
  el<HTMLButtonElement>("undo").disabled = !collection.canUndo();
  el<HTMLButtonElement>("redo").disabled = !collection.canRedo();

  const actions = el<HTMLDivElement>("mutation-actions");
  const report = collection.mutability;
  if (collection.selected && report) {
    const name = collection.selected.join("");
    actions.innerHTML =
      `<span>${name}:</span>` +
      `<button id="mutate-plus" ${report.plus ? "" : "disabled"}>apply +</button>` +
      `<button id="mutate-minus" ${report.minus ? "" : "disabled"}>apply -</button>` +
      `<span class="reason">${report.plus ? "" : report.reasons["plus"]?.detail ?? ""}` +
      ` ${report.minus ? "" : report.reasons["minus"]?.detail ?? ""}</span>`;
    el<HTMLButtonElement>("mutate-plus").onclick = () => void collection.applyMutation("+");
    el<HTMLButtonElement>("mutate-minus").onclick = () => void collection.applyMutation("-");
  } else {
    actions.innerHTML = collection.selected ? "<em>checking mutability…</em>" : "";
  }

  const errorBox = el<HTMLDivElement>("collection-error");
  errorBox.textContent = collection.error
    ? `${collection.error.code}: ${collection.error.detail}`
    : "";
}

function renderQuiverPanel(): void {
  const view = el<HTMLDivElement>("quiver-view");
  if (!quiver.state) {
    view.innerHTML = "<p>load a quiver to begin</p>";
  } else {
    view.innerHTML = renderQuiverSvg(quiver.state.doc, quiver.highlight);
    for (const node of view.querySelectorAll<SVGGElement>("g.vertex")) {
      node.addEventListener("click", () => {
        void quiver.clickVertex(parseMember(node.dataset.vertex!));
      });
    }
  }
  el<HTMLDivElement>("quiver-message").textContent =
    quiver.error ? `${quiver.error.code}: ${quiver.error.detail}` : quiver.message ?? "";
}

collection.onChange(renderCollectionPanel);
quiver.onChange(renderQuiverPanel);

el<HTMLButtonElement>("load-collection").onclick = () => {
  const { n, k, l } = params();
  void collection.load(n, l, k);
};
el<HTMLButtonElement>("undo").onclick = () => collection.undo();
el<HTMLButtonElement>("redo").onclick = () => collection.redo();
el<HTMLButtonElement>("load-quiver").onclick = () => {
  const { n, k, l } = params();
  const kind = el<HTMLSelectElement>("quiver-kind").value as QuiverKind;
  void quiver.load(kind, n, k, l);
};

renderCollectionPanel();
renderQuiverPanel();

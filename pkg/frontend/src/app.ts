// Page wiring: poll status and the tight list, render diagrams, and drive
// the attempt/commit flows. One mutation in flight at a time; the server
// arbitrates everything.

import { ProverApi, ApiError } from "./api.js";
import { renderAlphaChart, renderWord } from "./render.js";
import { buildAttemptView, buildViewModel } from "./viewmodel.js";
import type { AttemptPayload } from "./types.js";

const POLL_MS = 4000;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

export function startApp(base = ""): void {
  const api = new ProverApi(base);
  let lastAttempt: AttemptPayload | null = null;
  let busy = false;

  async function refresh(): Promise<void> {
    try {
      const [status, tight] = await Promise.all([api.status(), api.tight(60)]);
      const vm = buildViewModel(status, tight);
      el("session-path").textContent = vm.session;
      el("round-count").textContent = String(vm.rounds);
      el("library-size").textContent = String(vm.librarySize);
      el("alpha-now").textContent = vm.lastAlpha === null ? "-" : vm.lastAlpha.toFixed(3);
      el("alpha-now").className = vm.proven ? "stat proven" : "stat";
      el("pending").textContent = vm.pendingObligations.join(", ") || "none";
      el("asserted").textContent = vm.assertedObligations.join(", ") || "none";
      el("alpha-chart").innerHTML = renderAlphaChart(vm.alphaSeries);
      const list = el("tight-list");
      list.innerHTML = "";
      el("tight-count").textContent = String(vm.tightCount);
      for (const word of vm.tightWords) {
        const card = document.createElement("div");
        card.className = "tight-card";
        let diagram = "";
        try {
          diagram = renderWord(word, 140);
        } catch (err) {
          diagram = `<div class="render-error">${String(err)}</div>`;
        }
        card.innerHTML = `${diagram}<code>${word}</code>`;
        list.appendChild(card);
      }
    } catch (err) {
      el("errors").textContent = String(err);
    }
  }

  async function attempt(): Promise<void> {
    if (busy) return;
    busy = true;
    el("errors").textContent = "";
    try {
      const fragment = el<HTMLTextAreaElement>("fragment-input").value;
      const pivot = el<HTMLInputElement>("pivot-input").value.trim();
      const pairsRaw = el<HTMLInputElement>("pairs-input").value.trim();
      const pairs = pairsRaw
        ? pairsRaw.split(";").map((p) => p.split(",").map((s) => s.trim()))
        : [];
      lastAttempt = await api.attemptReduce({ fragment, pivot, pairs });
      const view = buildAttemptView(lastAttempt);
      const card = el("attempt-result");
      card.className = view.ok ? "evidence ok" : "evidence fail";
      const rows = view.diagnostics
        .map(
          (d) =>
            `<tr><td>${d.vertex}</td><td>${d.ell}</td>` +
            `<td>${d.inclusion === undefined ? "" : d.inclusion ? "yes" : "no"}</td></tr>`,
        )
        .join("");
      card.innerHTML =
        `<strong>${view.headline}</strong>` +
        view.detail.map((d) => `<div>${d}</div>`).join("") +
        (rows
          ? `<table><tr><th>vertex</th><th>list</th><th>inclusion</th></tr>${rows}</table>`
          : "");
    } catch (err) {
      el("errors").textContent = err instanceof ApiError ? err.message : String(err);
    } finally {
      busy = false;
    }
  }

  async function commit(): Promise<void> {
    if (busy) return;
    busy = true;
    el("errors").textContent = "";
    try {
      const id = el<HTMLInputElement>("entry-id").value.trim();
      const patterns = el<HTMLTextAreaElement>("patterns-input")
        .value.split("\n")
        .map((s) => s.trim())
        .filter(Boolean);
      const assertReason = el<HTMLInputElement>("assert-input").value.trim();
      await api.commit({
        id,
        patterns,
        fragment: lastAttempt?.fragment ?? "",
        pivot: lastAttempt?.pivot ?? "",
        pairs: lastAttempt?.pairs ?? [],
        evidence: assertReason ? null : lastAttempt,
        assert_reason: assertReason,
      });
      await refresh();
    } catch (err) {
      el("errors").textContent = err instanceof ApiError ? err.message : String(err);
    } finally {
      busy = false;
    }
  }

  el("attempt-button").addEventListener("click", () => void attempt());
  el("commit-button").addEventListener("click", () => void commit());
  void refresh();
  setInterval(() => void refresh(), POLL_MS);
}

declare global {
  interface Window {
    dischargelab: { startApp: typeof startApp };
  }
}

if (typeof window !== "undefined") {
  window.dischargelab = { startApp };
}

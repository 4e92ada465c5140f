// DOM wiring for the explorer: load walks, drag vectors, animate, export.

import { ApiClient, ServiceError, SupersededError } from "./api";
import {
  drawEditor, drawScene, editorLayout, hitTip, tipToVector,
} from "./render";
import {
  ExplorerState, MAX_WALKS, addWalk, badgeText, clampCursor, editVector,
  exportMap, importMap, initialState, maxCursor, removeWalk, replaceWalks,
  setPlaying, setSpeed, stepCursor,
} from "./state";
import { TRACE_COLORS, walksToSvg } from "./svg";
import type { WalkRequest, WalkResponse } from "./types";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const canvas = $<HTMLCanvasElement>("scene");
const editor = $<HTMLCanvasElement>("editor");
const numberInput = $<HTMLInputElement>("number");
const digitsInput = $<HTMLInputElement>("digit-count");
const apiInput = $<HTMLInputElement>("api-base");
const speedInput = $<HTMLInputElement>("speed");
const cursorLabel = $<HTMLSpanElement>("cursor-label");
const walkList = $<HTMLUListElement>("walk-list");
const notice = $<HTMLDivElement>("notice");

let state: ExplorerState = initialState();
let client = new ApiClient(apiInput.value);
let dragDigit = -1;
let lastTick = 0;

function showNotice(text: string, isError = true): void {
  notice.textContent = text;
  notice.className = isError ? "notice error" : "notice";
  if (text) setTimeout(() => { if (notice.textContent === text) notice.textContent = ""; }, 6000);
}

function walkRequest(number: string): WalkRequest {
  return {
    number,
    n: Math.max(1, Number(digitsInput.value) || 500),
    map: { name: state.map.name, mode: "float", vectors: state.map.vectors },
  };
}

function renderWalkList(): void {
  walkList.replaceChildren();
  state.walks.forEach((walk, i) => {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = TRACE_COLORS[i % TRACE_COLORS.length];
    const label = document.createElement("span");
    label.className = "expr";
    label.textContent = walk.number;
    const badge = document.createElement("span");
    badge.className = `badge ${walk.classification.kind}`;
    badge.textContent = badgeText(walk.classification);
    const remove = document.createElement("button");
    remove.textContent = "×";
    remove.title = "remove this walk";
    remove.addEventListener("click", () => {
      state = removeWalk(state, i);
      render();
    });
    item.append(swatch, label, badge, remove);
    walkList.append(item);
  });
}

function render(): void {
  drawScene(canvas.getContext("2d")!, state, canvas.width, canvas.height);
  drawEditor(editor.getContext("2d")!, state.map, editor.width, editor.height, dragDigit);
  renderWalkList();
  cursorLabel.textContent = `step ${state.cursor} / ${maxCursor(state)}`;
  $<HTMLButtonElement>("play").textContent = state.playing ? "pause" : "play";
}

// --------------------------------------------------------------------------
// loading and re-loading walks
// --------------------------------------------------------------------------

async function loadWalk(number: string): Promise<void> {
  if (state.walks.length >= MAX_WALKS) {
    showNotice(`at most ${MAX_WALKS} walks; remove one first`);
    return;
  }
  try {
    const walk = await client.walk(walkRequest(number), `load-${state.walks.length}`);
    state = addWalk(state, walk);
    state = { ...state, cursor: maxCursor(state) };
    render();
  } catch (err) {
    if (err instanceof SupersededError) return;
    showNotice(err instanceof ServiceError ? `${err.body.error}: ${err.body.detail}` : String(err));
  }
}

/** After a map edit: re-request every active walk with the new map.  On any
 * failure the previous state stays untouched. */
async function reloadAllWalks(): Promise<void> {
  if (state.walks.length === 0) return;
  const requests = state.walks.map((walk, i) =>
    client.walk({ ...walkRequest(walk.number), n: walk.digits.length || 1 }, `slot-${i}`));
  try {
    const walks = await Promise.all(requests);
    state = replaceWalks(state, walks as WalkResponse[]);
    render();
  } catch (err) {
    if (err instanceof SupersededError) return;
    showNotice(err instanceof ServiceError ? `${err.body.error}: ${err.body.detail}` : String(err));
  }
}

// --------------------------------------------------------------------------
// events
// --------------------------------------------------------------------------

$<HTMLFormElement>("load-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const number = numberInput.value.trim();
  if (number) void loadWalk(number);
});

apiInput.addEventListener("change", () => {
  client = new ApiClient(apiInput.value);
});

$<HTMLButtonElement>("play").addEventListener("click", () => {
  state = setPlaying(state, !state.playing);
  render();
});
$<HTMLButtonElement>("step-back").addEventListener("click", () => {
  state = stepCursor(setPlaying(state, false), -1);
  render();
});
$<HTMLButtonElement>("step-forward").addEventListener("click", () => {
  state = stepCursor(setPlaying(state, false), +1);
  render();
});
$<HTMLButtonElement>("to-end").addEventListener("click", () => {
  state = { ...setPlaying(state, false), cursor: maxCursor(state) };
  render();
});
speedInput.addEventListener("input", () => {
  state = setSpeed(state, Number(speedInput.value));
});

function tick(now: number): void {
  if (state.playing) {
    const elapsed = (now - lastTick) / 1000;
    const steps = Math.floor(elapsed * state.speed);
    if (steps > 0) {
      state = stepCursor(state, steps);
      lastTick = now;
      render();
    }
  } else {
    lastTick = now;
  }
  requestAnimationFrame(tick);
}

// vector dragging: live preview while dragging, walks re-request on release
editor.addEventListener("pointerdown", (ev) => {
  const rect = editor.getBoundingClientRect();
  const p: [number, number] = [ev.clientX - rect.left, ev.clientY - rect.top];
  dragDigit = hitTip(editorLayout(editor.width, editor.height), state.map, p);
  if (dragDigit >= 0) editor.setPointerCapture(ev.pointerId);
  render();
});
editor.addEventListener("pointermove", (ev) => {
  if (dragDigit < 0) return;
  const rect = editor.getBoundingClientRect();
  const p: [number, number] = [ev.clientX - rect.left, ev.clientY - rect.top];
  const layout = editorLayout(editor.width, editor.height);
  state = editVector(state, dragDigit, tipToVector(layout, p));
  render();
});
editor.addEventListener("pointerup", () => {
  if (dragDigit < 0) return;
  dragDigit = -1;
  render();
  void reloadAllWalks();
});

$<HTMLButtonElement>("reset-map").addEventListener("click", () => {
  state = { ...state, map: initialState().map };
  render();
  void reloadAllWalks();
});

function download(name: string, text: string, type: string): void {
  const url = URL.createObjectURL(new Blob([text], { type }));
  const link = document.createElement("a");
  link.href = url;
  link.download = name;
  link.click();
  URL.revokeObjectURL(url);
}

$<HTMLButtonElement>("export-json").addEventListener("click", () => {
  if (state.walks.length === 0) return showNotice("nothing to export");
  download("huella.json", JSON.stringify(state.walks, null, 2), "application/json");
});
$<HTMLButtonElement>("export-svg").addEventListener("click", () => {
  if (state.walks.length === 0) return showNotice("nothing to export");
  download("huella.svg", walksToSvg(state.walks), "image/svg+xml");
});
$<HTMLButtonElement>("export-map").addEventListener("click", () => {
  download("map.json", exportMap(state.map), "application/json");
});
$<HTMLInputElement>("import-map").addEventListener("change", async (ev) => {
  const file = (ev.target as HTMLInputElement).files?.[0];
  if (!file) return;
  try {
    state = { ...state, map: importMap(await file.text()) };
    render();
    void reloadAllWalks();
  } catch (err) {
    showNotice(`map import failed: ${err}`);
  }
});

void client.health().then(
  (doc) => showNotice(`service ok · v${doc.version} · cap ${doc.max_digits} digits`, false),
  () => showNotice(`service unreachable at ${client.base}; start it with: huella serve`),
);

render();
requestAnimationFrame(tick);

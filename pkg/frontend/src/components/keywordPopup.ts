import { SelectionState } from "../state.js";
import type { Candidate } from "../types.js";

export interface KeywordPopupHandles {
  state: SelectionState;
  setError(message: string): void;
}

export type SubmitHandler = (selected: string[], custom: string[]) => Promise<void>;

/**
 * The keyword confirmation step: one toggle chip per served candidate (at
 * most ten arrive), a free-text field for custom keywords, and a submit
 * button that stays disabled while nothing is selected. Double-clicking
 * submit sends a single request.
 */
export function renderKeywordPopup(
  container: HTMLElement,
  candidates: Candidate[],
  onSubmit: SubmitHandler,
): KeywordPopupHandles {
  const state = new SelectionState(candidates);
  container.textContent = "";

  const heading = document.createElement("p");
  heading.className = "popup-heading";
  heading.textContent = "Select the keywords relevant to this article:";
  container.appendChild(heading);

  const chipList = document.createElement("div");
  chipList.className = "chip-list";
  container.appendChild(chipList);

  const customList = document.createElement("div");
  customList.className = "custom-list";
  container.appendChild(customList);

  const errorBox = document.createElement("div");
  errorBox.className = "error-box";
  errorBox.setAttribute("role", "alert");
  errorBox.hidden = true;

  const submit = document.createElement("button");
  submit.type = "button";
  submit.className = "submit-button";
  submit.textContent = "Search for evidence";

  const refresh = () => {
    submit.disabled = state.empty || submitting;
  };

  let submitting = false;

  for (const candidate of candidates) {
    const chip = document.createElement("button");
    chip.type = "button";
    chip.className = "chip";
    chip.dataset.phrase = candidate.phrase;
    chip.textContent = candidate.display;
    chip.setAttribute("aria-pressed", "false");
    chip.addEventListener("click", () => {
      const nowChosen = state.toggle(candidate.phrase);
      chip.classList.toggle("chip-selected", nowChosen);
      chip.setAttribute("aria-pressed", String(nowChosen));
      refresh();
    });
    chipList.appendChild(chip);
  }

  const addRow = document.createElement("div");
  addRow.className = "add-row";
  const input = document.createElement("input");
  input.type = "text";
  input.placeholder = "Add your own keyword";
  const addButton = document.createElement("button");
  addButton.type = "button";
  addButton.textContent = "Add";

  const syncCandidateChips = () => {
    for (const chip of chipList.querySelectorAll<HTMLButtonElement>(".chip")) {
      const chosen = state.isChosen(chip.dataset.phrase ?? "");
      chip.classList.toggle("chip-selected", chosen);
      chip.setAttribute("aria-pressed", String(chosen));
    }
  };

  const addCustom = () => {
    const outcome = state.addCustom(input.value);
    input.value = "";
    if (outcome === "selected") {
      // the text matched an offered candidate: select its chip instead
      syncCandidateChips();
    } else if (outcome === "custom") {
      renderCustomChips();
    }
    refresh();
  };

  const renderCustomChips = () => {
    customList.textContent = "";
    for (const phrase of state.custom) {
      const chip = document.createElement("span");
      chip.className = "chip chip-selected chip-custom";
      chip.dataset.phrase = phrase;
      chip.textContent = phrase;
      const remove = document.createElement("button");
      remove.type = "button";
      remove.className = "chip-remove";
      remove.setAttribute("aria-label", `Remove keyword ${phrase}`);
      remove.textContent = "×";
      remove.addEventListener("click", () => {
        state.removeCustom(phrase);
        renderCustomChips();
        refresh();
      });
      chip.appendChild(remove);
      customList.appendChild(chip);
    }
  };

  addButton.addEventListener("click", addCustom);
  input.addEventListener("keydown", (event) => {
    if (event.key === "Enter") {
      event.preventDefault();
      addCustom();
    }
  });

  addRow.appendChild(input);
  addRow.appendChild(addButton);
  container.appendChild(addRow);
  container.appendChild(errorBox);
  container.appendChild(submit);

  const setError = (message: string) => {
    errorBox.hidden = !message;
    errorBox.textContent = message;
  };

  submit.addEventListener("click", async () => {
    if (state.empty || submitting) {
      return;
    }
    submitting = true;
    refresh();
    setError("");
    try {
      await onSubmit(state.selected, state.custom);
    } catch (error) {
      setError(error instanceof Error ? error.message : String(error));
      submitting = false;
      refresh();
    }
  });

  refresh();
  return { state, setError };
}

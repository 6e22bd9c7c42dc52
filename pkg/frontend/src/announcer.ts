// Screen-reader announcements via ARIA live regions: polite for routine
// messages, assertive for errors.

export class Announcer {
  readonly polite: HTMLElement;
  readonly assertive: HTMLElement;
  readonly log: Array<{ level: "polite" | "assertive"; text: string }> = [];

  constructor(container: HTMLElement) {
    this.polite = document.createElement("div");
    this.polite.setAttribute("aria-live", "polite");
    this.polite.setAttribute("role", "status");
    this.polite.className = "sr-announcer";
    this.assertive = document.createElement("div");
    this.assertive.setAttribute("aria-live", "assertive");
    this.assertive.setAttribute("role", "alert");
    this.assertive.className = "sr-announcer";
    container.append(this.polite, this.assertive);
  }

  say(text: string): void {
    this.polite.textContent = text;
    this.log.push({ level: "polite", text });
  }

  alert(text: string): void {
    this.assertive.textContent = text;
    this.log.push({ level: "assertive", text });
  }
}

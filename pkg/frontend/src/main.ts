import { apiBaseFromLocation, HttpClassifyClient } from "./api.js";
import { mountExplorer } from "./render.js";
import { GridController } from "./state.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");

const client = new HttpClassifyClient(apiBaseFromLocation());
let render: () => void = () => {};
const controller = new GridController(client, () => render());
render = mountExplorer(root, controller);
render();
void controller.loadFixture("eq23");

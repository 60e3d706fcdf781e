import { mount } from "./app";
import "./styles.css";

const root = document.getElementById("app");
if (root) {
  mount(root);
}

/// <reference types="vitest/config" />
import { defineConfig } from "vite";

export default defineConfig({
  server: {
    proxy: {
      "/v1": "http://127.0.0.1:8080",
      "/metrics": "http://127.0.0.1:8080",
      "/healthz": "http://127.0.0.1:8080",
    },
  },
  test: {
    environment: "jsdom",
    globalSetup: "./tests/globalSetup.ts",
    testTimeout: 30000,
    hookTimeout: 60000,
  },
});

package app;

import webfw.Spark;

public class App {
    public void main() {
        Spark.get("/", (request, response) -> {
            request.path();
            return null;
        });
        Spark.post("/", (request, response) -> {
            response.status(404);
            return null;
        });
    }
}

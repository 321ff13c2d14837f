function resolve(options: string): number {
node(options);
}
total;
key = ((node, index: Array<string>) =>result(...options, ...total)());
var value=  result, items="";
if (function () {
{
return node()("");
const user, user=false, list = true;
}
total = index(false, node);
}) {
if (function (state = 15, items: string) {
var key ={config: user  };
total?.handler?.limit;
}) {
const list =[key()?.list?.count], value, name =path(entry).merge.update;
} else if (path.build().fetch) {
return function () {
let options: Promise<User>= value;
return items;
};
}
return "";
state();
}
data;
index().parse;
return "ok";
name;
result?.options;
{
}
function track(items, user, handler = 18) {
}
